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

#include "gpauli/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "gpauli/analysis.hpp"
#include "gpauli/explorer.hpp"
#include "gpauli/text.hpp"
#include "gpauli/verify.hpp"

namespace gpauli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kListingLimit = 200;

struct GlobalFlags {
    std::string dims;
    bool json = false;
    std::size_t max_matrix_dim = Limits{}.max_matrix_dim;
    std::size_t max_elements = Limits{}.max_elements;
    std::uint64_t seed = 0;

    Limits limits() const {
        Limits l;
        l.max_matrix_dim = max_matrix_dim;
        l.max_elements = max_elements;
        return l;
    }
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Profile require_profile(const GlobalFlags &flags) {
    if (flags.dims.empty()) {
        throw UsageError("--dims is required for this command");
    }
    return make_profile(parse_dims(flags.dims));
}

std::vector<PauliElement> parse_all(const Profile &profile, const std::vector<std::string> &texts) {
    std::vector<PauliElement> out;
    for (const auto &t : texts) {
        out.push_back(parse_element(profile, t));
    }
    return out;
}

Json texts_json(std::span<const PauliElement> elements) {
    Json arr = Json::array();
    for (const auto &g : elements) {
        arr.push_back(format_element(g));
    }
    return arr;
}

Json dims_json(const DimensionProfile &profile) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < profile.dims().size(); ++i) {
        arr.push_back(profile.dims()[i]);
    }
    return arr;
}

Json optional_json(const std::optional<std::uint64_t> &v) {
    return v ? Json(*v) : Json(nullptr);
}

Json report_json(const StabilizerReport &r) {
    return Json{{"order", r.order},
                {"abelian", r.abelian},
                {"nontrivial", r.nontrivial},
                {"dim_formula", optional_json(r.dim_formula)},
                {"dim_oracle", optional_json(r.dim_oracle)},
                {"independent_given", r.independent_given},
                {"l_given", r.l_given},
                {"l_minimal", r.l_minimal}};
}

std::string optional_text(const std::optional<std::uint64_t> &v) {
    return v ? std::to_string(*v) : std::string("none");
}

int cmd_mul(const GlobalFlags &flags, const std::string &a, const std::string &b, std::ostream &out) {
    const Profile profile = require_profile(flags);
    const PauliElement product = parse_element(profile, a) * parse_element(profile, b);
    if (flags.json) {
        out << Json{{"dims", dims_json(*profile)}, {"product", format_element(product)}}.dump(2) << "\n";
    } else {
        out << format_element(product) << "\n";
    }
    return 0;
}

int cmd_closure(const GlobalFlags &flags, const std::vector<std::string> &gens, bool all, std::ostream &out) {
    const Profile profile = require_profile(flags);
    const Subgroup s = closure(profile, parse_all(profile, gens), flags.limits());
    const bool listed = all || s.order() <= kListingLimit;
    if (flags.json) {
        Json j{{"dims", dims_json(*profile)}, {"generators", texts_json(s.generators())}, {"order", s.order()}};
        j["elements"] = listed ? texts_json(s.elements()) : Json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order: " << s.order() << "\n";
    if (listed) {
        for (const auto &g : s.elements()) {
            out << format_element(g) << "\n";
        }
    } else {
        out << "(" << s.order() << " elements; listing suppressed above " << kListingLimit << ", pass --all)\n";
    }
    return 0;
}

int cmd_analyze(const GlobalFlags &flags, const std::vector<std::string> &gens, std::ostream &out) {
    const Profile profile = require_profile(flags);
    const auto elements = parse_all(profile, gens);
    const StabilizerReport r = analyze(profile, elements, {.limits = flags.limits(), .with_oracle = true});
    if (flags.json) {
        Json j{{"dims", dims_json(*profile)}, {"generators", texts_json(elements)}};
        j.update(report_json(r));
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order: " << r.order << "\n"
        << "abelian: " << std::boolalpha << r.abelian << "\n"
        << "nontrivial: " << r.nontrivial << "\n"
        << "dim_formula: " << optional_text(r.dim_formula) << "\n"
        << "dim_oracle: " << optional_text(r.dim_oracle) << "\n"
        << "independent_given: " << r.independent_given << "\n"
        << "l_given: " << r.l_given << "\n"
        << "l_minimal: " << r.l_minimal << "\n";
    return 0;
}

Json entry_json(const ScanEntry &e) {
    return Json{{"generators", texts_json(e.generators)},
                {"l_given", e.l_given},
                {"l_minimal", e.l_minimal},
                {"order", e.order},
                {"dim", e.dim}};
}

Json witnesses_json(const ConjectureScanReport &rep, const std::vector<Witness> &ws) {
    Json arr = Json::array();
    for (const auto &w : ws) {
        arr.push_back(Json{{"l", w.l}, {"first", entry_json(rep.entries[w.first])},
                           {"second", entry_json(rep.entries[w.second])}});
    }
    return arr;
}

std::string generators_text(const std::vector<PauliElement> &gens) {
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        s += (i ? ", " : "") + format_element(gens[i]);
    }
    return s + ">";
}

int cmd_enumerate(const GlobalFlags &flags, std::size_t max_generators, std::ostream &out) {
    const Profile profile = require_profile(flags);
    if (max_generators > 3) {
        throw UsageError("--max-generators must be between 0 and 3");
    }
    const ConjectureScanReport rep = conjecture_scan(profile, max_generators, flags.limits());
    if (flags.json) {
        Json entries = Json::array();
        for (const auto &e : rep.entries) {
            entries.push_back(entry_json(e));
        }
        Json j{{"dims", dims_json(*profile)},
               {"max_generators", rep.max_generators},
               {"nontrivial_count", rep.entries.size()},
               {"trivial_count", rep.trivial_count},
               {"entries", entries},
               {"functional_given", rep.functional_given},
               {"functional_minimal", rep.functional_minimal},
               {"witnesses",
                Json{{"given", witnesses_json(rep, rep.witnesses_given)},
                     {"minimal", witnesses_json(rep, rep.witnesses_minimal)}}}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "dims: " << profile->str() << "  max generators: " << max_generators << "\n"
        << "nontrivial stabilizers: " << rep.entries.size() << "  trivial subgroups: " << rep.trivial_count
        << "\n\n"
        << "l_given  l_minimal  order  dim  generators\n";
    for (const auto &e : rep.entries) {
        out << e.l_given << "        " << e.l_minimal << "          " << e.order << "      " << e.dim << "    "
            << generators_text(e.generators) << "\n";
    }
    out << "\nfunctional (l_given): " << std::boolalpha << rep.functional_given << "\n"
        << "functional (l_minimal): " << rep.functional_minimal << "\n";
    auto print = [&](const char *label, const std::vector<Witness> &ws) {
        for (const auto &w : ws) {
            const auto &a = rep.entries[w.first];
            const auto &b = rep.entries[w.second];
            out << "witness (" << label << ") l=" << w.l << ": |" << generators_text(a.generators) << "| = " << a.order
                << " vs |" << generators_text(b.generators) << "| = " << b.order << "\n";
        }
    };
    print("l_given", rep.witnesses_given);
    print("l_minimal", rep.witnesses_minimal);
    return 0;
}

int cmd_table(const GlobalFlags &flags, std::ostream &out) {
    const TableReport table = reproduce_table();
    if (flags.json) {
        Json rows = Json::array();
        for (const auto &row : table.rows) {
            Json j{{"group", row.label},
                   {"generators", texts_json(row.generators)},
                   {"expected_l", row.expected_l},
                   {"expected_order", row.expected_order},
                   {"matches", row.matches}};
            j.update(report_json(row.report));
            rows.push_back(j);
        }
        out << Json{{"dims", Json::array({2, 3})}, {"rows", rows}, {"all_match", table.all_match}}.dump(2) << "\n";
    } else {
        out << "C^2 (x) C^3\n"
            << "S                   l   |S|  dim  l_minimal\n";
        for (const auto &row : table.rows) {
            std::string label = row.label;
            label.resize(20, ' ');
            out << label << row.report.l_given << "   " << row.report.order << "    "
                << optional_text(row.report.dim_formula) << "    " << row.report.l_minimal
                << (row.matches ? "" : "   MISMATCH") << "\n";
        }
    }
    return table.all_match ? 0 : 1;
}

int cmd_verify(const GlobalFlags &flags, std::ostream &out) {
    VerifyOptions opt;
    opt.seed = flags.seed;
    opt.limits = flags.limits();
    if (!flags.dims.empty()) {
        opt.profiles = {parse_dims(flags.dims)};
        make_profile(opt.profiles.front());
    }
    const auto results = run_verification(opt);
    bool ok = true;
    Json arr = Json::array();
    for (const auto &r : results) {
        ok = ok && r.passed;
        if (flags.json) {
            arr.push_back(Json{{"check", r.name},
                               {"dims", r.dims},
                               {"passed", r.passed},
                               {"cases", r.cases},
                               {"worst_residual", r.worst_residual},
                               {"tolerance", r.tolerance},
                               {"detail", r.detail}});
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.dims << "] cases=" << r.cases;
            if (r.tolerance > 0) {
                out << " worst=" << r.worst_residual << " tol=" << r.tolerance;
            }
            if (!r.detail.empty()) {
                out << " : " << r.detail;
            }
            out << "\n";
        }
    }
    if (flags.json) {
        out << Json{{"seed", flags.seed}, {"passed", ok}, {"checks", arr}}.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact arithmetic and stabilizer analysis for mixed-dimension Pauli groups", "gpauli"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--dims", flags.dims, "Comma-separated site dimensions, e.g. 2,3");
    app.add_flag("--json", flags.json, "Machine-readable output");
    app.add_option("--max-matrix-dim", flags.max_matrix_dim, "Dense matrix cap N");
    app.add_option("--max-elements", flags.max_elements, "Element-set cap for closures");
    app.add_option("--seed", flags.seed, "Seed for randomized checks");

    std::string mul_a, mul_b;
    auto *mul = app.add_subcommand("mul", "Multiply two elements");
    mul->add_option("A", mul_a)->required();
    mul->add_option("B", mul_b)->required();

    std::vector<std::string> gens;
    bool list_all = false;
    auto *clos = app.add_subcommand("closure", "Close a generating set into a subgroup");
    clos->add_option("-g,--generator", gens, "Generator element text (repeatable)");
    clos->add_flag("--all", list_all, "List every element regardless of size");

    auto *anal = app.add_subcommand("analyze", "Stabilizer report for a generating set");
    anal->add_option("-g,--generator", gens, "Generator element text (repeatable)");

    std::size_t max_generators = 2;
    auto *enumr = app.add_subcommand("enumerate", "Enumerate stabilizers and scan generator count vs order");
    enumr->add_option("--max-generators", max_generators, "Largest generating tuple (0..3)");

    auto *table = app.add_subcommand("table", "Recompute the C^2 (x) C^3 reference table");
    auto *verify = app.add_subcommand("verify", "Run the matrix-oracle cross-check suite");

    std::vector<const char *> argv{"gpauli"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*mul) {
            return cmd_mul(flags, mul_a, mul_b, out);
        }
        if (*clos) {
            return cmd_closure(flags, gens, list_all, out);
        }
        if (*anal) {
            return cmd_analyze(flags, gens, out);
        }
        if (*enumr) {
            return cmd_enumerate(flags, max_generators, out);
        }
        if (*table) {
            return cmd_table(flags, out);
        }
        if (*verify) {
            return cmd_verify(flags, out);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        // ProfileError, ProfileMismatchError and UsageError land here.
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace gpauli
