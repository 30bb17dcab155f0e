/*
   Copyright 2026 The lensclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LENSCLASS_CLI_HPP
#define LENSCLASS_CLI_HPP

// Command dispatch for the lensclass tool.
//
// Exit codes: 0 success, 1 precondition or usage error, 2 data-file error
// (including data that fails a cross-check), 3 internal consistency failure.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lensclass/classdata.hpp"
#include "lensclass/classify.hpp"
#include "lensclass/document.hpp"
#include "lensclass/errors.hpp"
#include "lensclass/lens.hpp"
#include "lensclass/modular.hpp"

#ifndef LENSCLASS_DEFAULT_DATA
#define LENSCLASS_DEFAULT_DATA "data/class_groups.txt"
#endif

namespace lensclass::cli {

inline constexpr const char* kDataEnvVar = "LENSCLASS_DATA";

enum ExitCode : int { kOk = 0, kPrecondition = 1, kDataFailure = 2, kInternal = 3 };

struct Outcome {
    int exit_code = kOk;
    std::optional<OutputDocument> document;
};

/// --data, then $LENSCLASS_DATA, then the bundled table.
inline std::string resolve_data_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kDataEnvVar); env && *env) return env;
    return LENSCLASS_DEFAULT_DATA;
}

inline std::vector<std::int64_t> parse_rotations(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (lensclass::detail::trim(item.substr(used)).size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw PreconditionError("cannot parse rotation list '" + text + "'");
        }
    }
    if (out.empty()) throw PreconditionError("empty rotation list");
    return out;
}

namespace detail {

inline Provenance provenance_of(const ClassGroupDataset& data) { return {data.source, data.citations}; }

inline Json witness_json(const HomeomorphismWitness& w) {
    return {{"unit", w.unit}, {"permutation", w.permutation}, {"signs", w.signs}};
}

inline std::string rotations_string(const LensSpace& l) {
    std::string s;
    for (std::size_t i = 0; i < l.rotations().size(); ++i) s += (i ? "," : "") + std::to_string(l.rotations()[i]);
    return s;
}

inline std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

inline constexpr const char* kRhoNormalization =
    "rho components are the raw products prod_i (z^(j q_i) + 1)/(z^(j q_i) - 1) with z = exp(2 pi i/d); "
    "only differences and zero tests are meaningful";

inline OutputDocument cmd_classify(std::uint64_t ell, std::uint64_t n, const ClassGroupDataset& data,
                                   TextTable* table) {
    const ClassificationResult r = classify_actions(ell, n, &data);
    OutputDocument doc;
    doc.command = "classify";
    doc.inputs = {{"ell", ell}, {"n", n}};
    doc.results["kind"] = r.kind == ClassificationResult::Kind::single_class ? "single_class" : "strata";
    doc.results["countably_infinite"] = r.countably_infinite;
    Json groups = Json::array();
    Json strata = Json::array();
    for (const auto& s : r.strata) {
        if (groups.empty() || groups.back()["d"] != s.d) groups.push_back({{"d", s.d}, {"classes", 0}});
        groups.back()["classes"] = groups.back()["classes"].get<std::uint64_t>() + 1;
        strata.push_back({{"d", s.d},
                          {"q_class", s.q_class},
                          {"lattice_rank", s.lattice_rank},
                          {"h0", h0_descriptor_json(s.h0_descriptor)},
                          {"fiber_bound", s.fiber_bound}});
        if (table)
            table->add_row({std::to_string(s.d), std::to_string(s.q_class), FgAbGroup::free(s.lattice_rank).to_string(),
                            lensclass::to_string(s.h0_descriptor), std::to_string(s.fiber_bound)});
    }
    doc.results["divisor_groups"] = groups;
    doc.results["strata"] = strata;
    doc.assumptions = r.assumptions;
    if (r.kind == ClassificationResult::Kind::strata) doc.data_provenance.push_back(provenance_of(data));
    return doc;
}

inline OutputDocument cmd_qdk(std::uint64_t d, std::uint64_t k, TextTable* table) {
    const PartitionQdk part = qdk_partition(d, k);
    OutputDocument doc;
    doc.command = "qdk";
    doc.inputs = {{"d", d}, {"k", k}};
    doc.results["class_count"] = part.size();
    doc.results["representatives"] = part.representatives;
    doc.results["classes"] = part.classes;
    if (table)
        for (std::size_t i = 0; i < part.size(); ++i)
            table->add_row({std::to_string(part.representatives[i]), std::to_string(part.classes[i].size()),
                            join(part.classes[i])});
    return doc;
}

inline OutputDocument cmd_lens_compare(std::uint64_t d, const std::string& q1, const std::string& q2,
                                       TextTable* table) {
    const LensSpace a(d, parse_rotations(q1));
    const LensSpace b(d, parse_rotations(q2));
    const bool htpy = homotopy_equivalent(a, b);
    const auto witness = homeomorphism_witness(a, b);
    const RhoDifference raw = rho_difference(a, b);

    OutputDocument doc;
    doc.command = "lens-compare";
    doc.inputs = {{"d", d}, {"q", rotations_string(a)}, {"q2", rotations_string(b)}};
    const Rational la = linking_form(d, static_cast<std::int64_t>(postnikov_invariant(a)), a.k());
    const Rational lb = linking_form(d, static_cast<std::int64_t>(postnikov_invariant(b)), b.k());
    doc.results["postnikov"] = {postnikov_invariant(a), postnikov_invariant(b)};
    doc.results["qdk_class"] = {qdk_class_of(d, a.k(), static_cast<std::int64_t>(postnikov_invariant(a))),
                                qdk_class_of(d, b.k(), static_cast<std::int64_t>(postnikov_invariant(b)))};
    doc.results["linking_form"] = {la.get_str(), lb.get_str()};
    doc.results["homotopy_equivalent"] = htpy;
    doc.results["homeomorphic"] = witness.has_value();
    doc.results["witness"] = witness ? witness_json(*witness) : Json(nullptr);
    doc.results["rho_difference_zero"] = raw.is_zero;
    if (witness)
        doc.results["normalized_rho_difference_zero"] = normalized_rho_difference(a, b, *witness).is_zero;
    doc.assumptions.emplace_back(kRhoNormalization);
    if (table) {
        table->add_row({"homotopy_equivalent", htpy ? "true" : "false"});
        table->add_row({"homeomorphic", witness ? "true" : "false"});
        table->add_row({"rho_difference_zero", raw.is_zero ? "true" : "false"});
    }
    return doc;
}

inline OutputDocument cmd_rho(std::uint64_t d, const std::string& q, TextTable* table) {
    const LensSpace l(d, parse_rotations(q));
    const RhoVector rho = rho_invariant(l);
    OutputDocument doc;
    doc.command = "rho";
    doc.inputs = {{"d", d}, {"q", rotations_string(l)}};
    Json comps = Json::array();
    for (std::uint64_t j = 1; j < d; ++j) {
        Json coeffs = Json::array();
        for (const auto& c : rho.at(j).value().coefficients()) coeffs.push_back(c.get_str());
        comps.push_back({{"j", j}, {"coefficients", coeffs}, {"display", rho.at(j).to_string()}});
        if (table) table->add_row({std::to_string(j), rho.at(j).to_string()});
    }
    doc.results["basis"] = "coefficients of 1, z, ..., z^(phi(d)-1) modulo the d-th cyclotomic polynomial";
    doc.results["components"] = comps;
    doc.results["conjugation_symmetric"] = rho.conjugation_symmetric();
    doc.assumptions.emplace_back(kRhoNormalization);
    return doc;
}

inline OutputDocument cmd_h0(std::uint64_t p, const ClassGroupDataset& data, TextTable* table) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime (got " + std::to_string(p) + ")");
    const ClassGroupRecord* rec = data.find(p);
    if (!rec) throw DataError("no class-group record for p = " + std::to_string(p) + " in " + data.source);
    const H0Result h = h0_from_record(*rec);
    OutputDocument doc;
    doc.command = "h0";
    doc.inputs = {{"p", p}};
    doc.results["record"] = record_json(*rec);
    doc.results["h0"] = h0_json(h);
    doc.assumptions.emplace_back(kRimAssumption);
    if (h.grh_conditional) doc.assumptions.emplace_back("the value assumes the Generalized Riemann Hypothesis");
    doc.data_provenance.push_back(provenance_of(data));
    if (table)
        table->add_row({std::to_string(p), rec->cl_plus.tuple_notation() + (rec->grh_conditional ? "*" : ""),
                        rec->cl_minus_mod2.tuple_notation(), h.to_string()});
    return doc;
}

inline OutputDocument cmd_table1(const ClassGroupDataset& data, TextTable* table) {
    const Table1Report rep = reproduce_table1(data.records, true);
    OutputDocument doc;
    doc.command = "table1";
    doc.inputs = {{"bound", kTable1Bound}};
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        rows.push_back({{"p", row.record.p},
                        {"cl_plus", group_json(row.record.cl_plus)},
                        {"cl_minus_mod2", group_json(row.record.cl_minus_mod2)},
                        {"h0", h0_json(row.h0)}});
        if (table)
            table->add_row({std::to_string(row.record.p),
                            row.record.cl_plus.tuple_notation() + (row.record.grh_conditional ? "*" : ""),
                            row.record.cl_minus_mod2.tuple_notation(), row.h0.to_string()});
    }
    doc.results["rows"] = rows;
    doc.results["vanishing"] = rep.vanishing;
    doc.results["vanishing_count"] = rep.vanishing.size();
    doc.results["gaps"] = rep.gaps;
    doc.results["mismatches"] = rep.mismatches;
    doc.results["matches_reference"] = rep.matches();
    doc.assumptions.emplace_back(kRimAssumption);
    doc.assumptions.emplace_back("starred values assume the Generalized Riemann Hypothesis");
    if (rep.any_conditional_vanishing)
        doc.assumptions.emplace_back("vanishing for 157 <= p <= 241 assumes the Generalized Riemann Hypothesis");
    doc.data_provenance.push_back(provenance_of(data));
    return doc;
}

inline OutputDocument cmd_hmod(std::uint64_t d, std::uint64_t k, TextTable* table) {
    const HModReport r = hmod_report(d, k);
    OutputDocument doc;
    doc.command = "hmod";
    doc.inputs = {{"d", d}, {"k", k}};
    doc.results = {{"a_order", integer_json(r.a_order)},
                   {"b_order", r.b_order},
                   {"e", r.e},
                   {"total_order", integer_json(r.total_order)},
                   {"effective_quotient_order", r.effective_quotient_order},
                   {"indeterminacy_bound", indeterminacy_bound(d, k)},
                   {"discrepancy_flag", r.discrepancy_flag}};
    if (r.discrepancy_flag)
        doc.assumptions.emplace_back("the exponent-e subgroup B has order " + std::to_string(r.b_order) +
                                     " != e = " + std::to_string(r.e) +
                                     "; effective_quotient_order is 4e while total_order uses |B|");
    if (table) {
        table->add_row({"a_order", r.a_order.get_str()});
        table->add_row({"b_order", std::to_string(r.b_order)});
        table->add_row({"e", std::to_string(r.e)});
        table->add_row({"total_order", r.total_order.get_str()});
        table->add_row({"effective_quotient_order", std::to_string(r.effective_quotient_order)});
        table->add_row({"discrepancy_flag", r.discrepancy_flag ? "true" : "false"});
    }
    return doc;
}

inline OutputDocument cmd_validate(const ClassGroupDataset& data, TextTable* table) {
    const ValidationReport rep = validate_records(data.records);
    OutputDocument doc;
    doc.command = "validate-data";
    doc.inputs = {{"data", data.source}};
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        entries.push_back({{"p", e.p}, {"h_minus", e.h_minus ? integer_json(*e.h_minus) : Json(nullptr)}});
        if (table) table->add_row({std::to_string(e.p), e.h_minus ? e.h_minus->get_str() : "-"});
    }
    Json issues = Json::array();
    for (const auto& i : rep.issues) issues.push_back({{"p", i.p}, {"message", i.message}});
    doc.results["entries"] = entries;
    doc.results["issues"] = issues;
    doc.results["ok"] = rep.ok();
    doc.data_provenance.push_back(provenance_of(data));
    return doc;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline Outcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants for free cyclic actions on S^1 x S^n and lens spaces", "lensclass"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

    std::uint64_t ell = 0, n = 0, d = 0, k = 0, p = 0;
    std::string q1, q2, data_flag;

    auto* classify = app.add_subcommand("classify", "Strata of free C_ell actions on S^1 x S^n");
    classify->add_option("--ell", ell, "Order of the cyclic group")->required();
    classify->add_option("--n", n, "Sphere dimension")->required();
    classify->add_option("--data", data_flag, "Class-group data file");

    auto* qdk = app.add_subcommand("qdk", "Partition Q_d^k of the units mod d");
    qdk->add_option("--d", d)->required();
    qdk->add_option("--k", k)->required();

    auto* compare = app.add_subcommand("lens-compare", "Compare two lens spaces L(d; q) and L(d; q2)");
    compare->add_option("--d", d)->required();
    compare->add_option("--q", q1, "Comma-separated rotation numbers")->required();
    compare->add_option("--q2", q2, "Comma-separated rotation numbers")->required();

    auto* rho = app.add_subcommand("rho", "Exact rho-multisignature of L(d; q)");
    rho->add_option("--d", d)->required();
    rho->add_option("--q", q1)->required();

    auto* h0 = app.add_subcommand("h0", "H_0(C_2; Cl_p) from the class-group data");
    h0->add_option("--p", p)->required();
    h0->add_option("--data", data_flag);

    auto* table1 = app.add_subcommand("table1", "Reproduce the H_0(C_2; Cl_p) table for p <= 241");
    table1->add_option("--data", data_flag);

    auto* hmod = app.add_subcommand("hmod", "Orders in the self-equivalence group of S^1 x L^{2k-1}_{d,q}");
    hmod->add_option("--d", d)->required();
    hmod->add_option("--k", k)->required();

    auto* validate = app.add_subcommand("validate-data", "Audit a data file against the analytic class number");
    validate->add_option("--data", data_flag)->required();

    // Global options may follow the subcommand.
    for (auto* sub : {classify, qdk, compare, rho, h0, table1, hmod, validate})
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? kOk : kPrecondition, std::nullopt};
    }

    const bool as_table = format == "table";
    try {
        OutputDocument doc;
        std::optional<TextTable> table;
        auto load = [&] { return load_dataset(resolve_data_path(data_flag)); };

        if (classify->parsed()) {
            table.emplace(std::vector<std::string>{"d", "q_class", "lattice", "H_0", "fiber_bound"});
            lensclass::detail::require_ell(ell);
            doc = detail::cmd_classify(ell, n, load(), as_table ? &*table : nullptr);
        } else if (qdk->parsed()) {
            table.emplace(std::vector<std::string>{"representative", "size", "members"});
            doc = detail::cmd_qdk(d, k, as_table ? &*table : nullptr);
        } else if (compare->parsed()) {
            table.emplace(std::vector<std::string>{"property", "value"});
            doc = detail::cmd_lens_compare(d, q1, q2, as_table ? &*table : nullptr);
        } else if (rho->parsed()) {
            table.emplace(std::vector<std::string>{"j", "rho(j)"});
            doc = detail::cmd_rho(d, q1, as_table ? &*table : nullptr);
        } else if (h0->parsed()) {
            table.emplace(std::vector<std::string>{"p", "Cl_p^+", "Cl_p^-/2", "H_0(C_2;Cl_p)"});
            doc = detail::cmd_h0(p, load(), as_table ? &*table : nullptr);
        } else if (table1->parsed()) {
            table.emplace(std::vector<std::string>{"p", "Cl_p^+", "Cl_p^-/2", "H_0(C_2;Cl_p)"});
            doc = detail::cmd_table1(load(), as_table ? &*table : nullptr);
        } else if (hmod->parsed()) {
            table.emplace(std::vector<std::string>{"quantity", "value"});
            doc = detail::cmd_hmod(d, k, as_table ? &*table : nullptr);
        } else {
            table.emplace(std::vector<std::string>{"p", "h_p^-"});
            doc = detail::cmd_validate(load(), as_table ? &*table : nullptr);
        }

        if (as_table) {
            table->print(out);
            if (doc.command == "table1") {
                out << "H_0 vanishes for the " << doc.results["vanishing_count"].get<std::size_t>()
                    << " primes p <= " << kTable1Bound << " not listed.\n";
            }
            if (doc.command == "validate-data")
                for (const auto& i : doc.results["issues"])
                    out << "issue: p = " << i["p"].get<std::uint64_t>() << ": " << i["message"].get<std::string>() << '\n';
            for (const auto& a : doc.assumptions) out << "# " << a << '\n';
        } else {
            out << emit(doc);
        }

        int code = kOk;
        if (doc.command == "table1" && !doc.results["matches_reference"].get<bool>()) code = kDataFailure;
        if (doc.command == "validate-data" && !doc.results["ok"].get<bool>()) code = kDataFailure;
        return {code, std::move(doc)};
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return {kPrecondition, std::nullopt};
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return {kDataFailure, std::nullopt};
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return {kInternal, std::nullopt};
    }
}

}  // namespace lensclass::cli

#endif
