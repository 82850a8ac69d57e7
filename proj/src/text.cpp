// Copyright 2026 The gpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpauli/text.hpp"

#include <cctype>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

class Cursor {
   public:
    explicit Cursor(std::string_view text) : text_(text) {
    }

    bool at_end() const {
        return pos_ >= text_.size();
    }
    std::size_t column() const {
        return pos_ + 1;
    }
    bool peek(char c) const {
        return !at_end() && text_[pos_] == c;
    }
    bool peek(std::string_view s) const {
        return text_.substr(pos_, s.size()) == s;
    }

    void expect(char c) {
        if (!peek(c)) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void spaces() {
        if (!peek(' ')) {
            fail("expected space");
        }
        while (peek(' ')) {
            ++pos_;
        }
    }

    Exponent integer() {
        const std::size_t start = pos_;
        bool negative = false;
        if (peek('-')) {
            negative = true;
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected digit");
        }
        Exponent value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (Exponent{1} << 58)) {
                pos_ = start;
                fail("integer out of range");
            }
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return negative ? -value : value;
    }

    [[noreturn]] void fail(const std::string &what) const {
        std::string found = at_end() ? "end of input" : std::string("'") + text_[pos_] + "'";
        throw ParseError(what + ", found " + found, column());
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PauliElement parse_element(const Profile &profile, std::string_view text) {
    Cursor cur(text);
    Exponent phase = 0;
    if (cur.peek("z^")) {
        cur.expect('z');
        cur.expect('^');
        phase = cur.integer();
        cur.spaces();
    }
    std::vector<Exponent> xs, zs;
    while (true) {
        cur.expect('X');
        xs.push_back(cur.integer());
        cur.expect('Z');
        zs.push_back(cur.integer());
        if (cur.at_end()) {
            break;
        }
        cur.spaces();
        cur.expect('x');
        cur.spaces();
    }
    if (xs.size() != profile->num_sites()) {
        throw ParseError("element has " + std::to_string(xs.size()) + " sites but the profile has " +
                             std::to_string(profile->num_sites()),
                         cur.column());
    }
    const auto n = static_cast<Eigen::Index>(xs.size());
    return PauliElement(profile, phase, Eigen::Map<ExponentVector>(xs.data(), n),
                        Eigen::Map<ExponentVector>(zs.data(), n));
}

std::string format_element(const PauliElement &g) {
    std::string out;
    if (g.phase_exp() != 0) {
        out += "z^" + std::to_string(g.phase_exp()) + " ";
    }
    for (std::size_t i = 0; i < g.num_sites(); ++i) {
        if (i) {
            out += " x ";
        }
        auto [p, q] = g.site(i);
        out += "X" + std::to_string(p) + "Z" + std::to_string(q);
    }
    return out;
}

std::vector<Exponent> parse_dims(std::string_view text) {
    std::vector<Exponent> dims;
    Cursor cur(text);
    while (true) {
        dims.push_back(cur.integer());
        if (cur.at_end()) {
            break;
        }
        cur.expect(',');
    }
    return dims;
}

}  // namespace gpauli
