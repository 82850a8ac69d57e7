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

#include "gpauli/oracle.hpp"

#include <cmath>
#include <sstream>

namespace gpauli {

CyclotomicSum summed_trace(const Subgroup &s, const Limits &limits) {
    CyclotomicSum total(s.profile().phase_modulus());
    for (const auto &g : s.elements()) {
        total += trace(element_to_matrix(g, limits));
    }
    return total;
}

std::uint64_t projector_trace(const Subgroup &s, const Limits &limits) {
    const std::complex<double> value = summed_trace(s, limits).evaluate<double>() / static_cast<double>(s.order());
    const double rounded = std::round(value.real());
    if (std::abs(value.real() - rounded) > kTraceTolerance || std::abs(value.imag()) > kTraceTolerance ||
        rounded < 0) {
        std::ostringstream msg;
        msg << "projector trace " << value << " is not a non-negative integer";
        throw ConsistencyError(msg.str());
    }
    return static_cast<std::uint64_t>(rounded);
}

}  // namespace gpauli
