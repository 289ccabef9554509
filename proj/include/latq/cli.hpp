#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_reports.hpp"
#include "gentype.hpp"
#include "latticefile.hpp"
#include "singular.hpp"

namespace latq::cli {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LatticeFileError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ParsedLattice load(const std::string& path) { return parse_lattice(slurp(path)); }

inline std::vector<unsigned long> parse_exponents(const std::string& s) {
    std::vector<unsigned long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoul(tok));
    }
    return out;
}

inline EmbeddingCase parse_case_file(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LatticeFileError(std::string("JSON parse error at byte ") +
                               std::to_string(e.byte) + ": " + e.what());
    }
    EmbeddingCase c;
    c.name = j.value("name", "file-case");
    if (!j.contains("d")) throw LatticeFileError("d: missing");
    c.field_d = j.at("d").get<long>();
    if (!j.contains("sub_gram") || !j.at("sub_gram").is_array())
        throw LatticeFileError("sub_gram: expected a matrix");
    std::size_t k = j.at("sub_gram").size();
    FMat g(k, k, FieldElem::zero(c.field_d));
    for (std::size_t i = 0; i < k; ++i) {
        const auto& row = j.at("sub_gram").at(i);
        if (!row.is_array() || row.size() != k)
            throw LatticeFileError("sub_gram: ragged matrix");
        for (std::size_t t = 0; t < k; ++t)
            g(i, t) = parse_field_entry(row.at(t), c.field_d,
                                        "sub_gram[" + std::to_string(i) + "][" +
                                            std::to_string(t) + "]");
    }
    c.sub_gram = g;
    if (!j.contains("embedding") || !j.at("embedding").is_array() ||
        j.at("embedding").size() != k)
        throw LatticeFileError("embedding: expected one ambient vector per sub basis vector");
    for (std::size_t i = 0; i < k; ++i) {
        const auto& row = j.at("embedding").at(i);
        if (!row.is_array() || row.size() != 14)
            throw LatticeFileError("embedding: vectors must have 14 coordinates");
        FVec v;
        for (std::size_t t = 0; t < 14; ++t)
            v.push_back(parse_field_entry(row.at(t), c.field_d,
                                          "embedding[" + std::to_string(i) + "][" +
                                              std::to_string(t) + "]"));
        c.embedding.push_back(std::move(v));
    }
    c.n = 14 - k - 1;
    c.star_assumed = j.value("assume_star", false);
    c.has_expectations = j.contains("expected_complement") && j.contains("expected_root_count") &&
                         j.contains("expected_weight") && j.contains("expected_root_weight");
    if (c.has_expectations) {
        c.expected_complement = j.at("expected_complement").get<std::string>();
        c.expected_root_count = j.at("expected_root_count").get<std::size_t>();
        c.expected_weight = Rat(static_cast<long>(j.at("expected_weight").get<long long>()));
        c.expected_root_weight = Rat(static_cast<long>(j.at("expected_root_weight").get<long long>()));
    }
    if (j.contains("candidates"))
        for (const auto& lbl : j.at("candidates"))
            c.candidates.push_back(plain_candidate(lbl.get<std::string>()));
    return c;
}

}  // namespace detail

/// In-process CLI entry point; argv without the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice arithmetic for Hermitian forms, trace lattices and"
                 " general-type hypothesis checking"};
    app.require_subcommand(1);

    std::string file1, file2, norm_str, exponents_str, case_name, case_file;
    long order = 0;
    unsigned long n_min = 1, n_max = 1, seisu_max = 2000;
    bool allow_large = false, assume_star = false, verify = false;

    auto* analyze = app.add_subcommand("analyze", "invariants of a lattice file");
    analyze->add_option("file", file1)->required();

    auto* traceform = app.add_subcommand("trace-form", "emit the trace lattice of a Hermitian file");
    traceform->add_option("file", file1)->required();

    auto* roots = app.add_subcommand("roots", "enumerate vectors of a given norm (definite only)");
    roots->add_option("file", file1)->required();
    roots->add_option("--norm", norm_str, "target norm (default: -2 or 2 by sign)");
    roots->add_flag("--allow-large-rank", allow_large, "permit enumeration beyond rank 12");

    auto* identify = app.add_subcommand("identify", "ADE decomposition of the root system");
    identify->add_option("file", file1)->required();

    auto* complement = app.add_subcommand("complement", "orthogonal complement of a sublattice");
    complement->add_option("ambient", file1)->required();
    complement->add_option("sub-basis", file2)->required();

    auto* isometric = app.add_subcommand("isometric", "decide isometry of two definite lattices");
    isometric->add_option("file1", file1)->required();
    isometric->add_option("file2", file2)->required();

    auto* age_cmd = app.add_subcommand("age", "age of an eigenvalue profile");
    age_cmd->add_option("--order", order)->required();
    age_cmd->add_option("--exponents", exponents_str)->required();

    auto* rst = app.add_subcommand("rst-scan", "exact minimum age over (r,k2,v) data");
    rst->add_option("--n-min", n_min)->required();
    rst->add_option("--n-max", n_max)->required();

    auto* seisu = app.add_subcommand("seisu", "certify the totative fractional-part sums");
    seisu->add_option("--max", seisu_max);

    auto* gt = app.add_subcommand("general-type", "run the hypothesis pipeline on one case");
    auto* opt_case = gt->add_option("--case", case_name, "built-in catalog case name");
    auto* opt_file = gt->add_option("--file", case_file, "case description file");
    gt->add_flag("--assume-star", assume_star, "declare the cusp-vanishing assumption");
    opt_case->excludes(opt_file);

    auto* cat = app.add_subcommand("catalog", "list or verify the built-in cases");
    cat->add_flag("--verify", verify, "run the full pipeline on every case");

    try {
        std::vector<const char*> argv;
        argv.push_back("latq");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (analyze->parsed()) return reports::cmd_analyze(detail::load(file1), out);
        if (traceform->parsed()) {
            ParsedLattice p = detail::load(file1);
            if (!p.hermitian) {
                err << "error: trace-form expects a hermitian lattice file\n";
                return kInputError;
            }
            out << emit_quadratic(trace_form(*p.hermitian),
                                  p.name.empty() ? "" : p.name + "_Q");
            return kOk;
        }
        if (roots->parsed())
            return reports::cmd_roots(detail::load(file1), norm_str, allow_large, out, err);
        if (identify->parsed()) return reports::cmd_identify(detail::load(file1), out, err);
        if (complement->parsed())
            return reports::cmd_complement(detail::load(file1), detail::slurp(file2), out, err);
        if (isometric->parsed())
            return reports::cmd_isometric(detail::load(file1), detail::load(file2), out, err);
        if (age_cmd->parsed()) {
            EigenvalueProfile p{static_cast<unsigned long>(order),
                                detail::parse_exponents(exponents_str)};
            return reports::cmd_age(p, out);
        }
        if (rst->parsed()) return reports::cmd_rst_scan(n_min, n_max, out, err);
        if (seisu->parsed()) return reports::cmd_seisu(seisu_max, out);
        if (gt->parsed()) {
            std::vector<EmbeddingCase> cases = catalog();
            EmbeddingCase c;
            if (!case_name.empty()) {
                c = catalog_case(cases, case_name);
            } else if (!case_file.empty()) {
                c = detail::parse_case_file(detail::slurp(case_file));
            } else {
                err << "error: general-type requires --case or --file\n";
                return kInputError;
            }
            if (assume_star) c.star_assumed = true;
            return reports::cmd_general_type(c, out);
        }
        if (cat->parsed()) return reports::cmd_catalog(verify, out);
    } catch (const LatticeFileError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: no subcommand\n";
    return kInputError;
}

}  // namespace latq::cli
