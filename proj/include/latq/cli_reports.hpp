#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "embeddings.hpp"
#include "enumerate.hpp"
#include "gentype.hpp"
#include "latticefile.hpp"
#include "singular.hpp"

namespace latq::cli {

// exit codes: 0 verified/success, 1 hypothesis failure / negative verdict,
// 2 malformed input or misuse
inline constexpr int kOk = 0;
inline constexpr int kHypothesisFailed = 1;
inline constexpr int kInputError = 2;

namespace detail {

inline FieldElem parse_field_entry(const nlohmann::json& e, long d, const std::string& where) {
    if (e.is_number_integer()) return FieldElem::from_rat(Rat(static_cast<long>(e.get<long long>())), d);
    if (!e.is_object()) throw LatticeFileError(where + ": expected integer or {a_num,...}");
    Rat a = latq::detail::entry_rat(e, where, "a_num", "a_den");
    Rat b = latq::detail::entry_rat(e, where, "b_num", "b_den");
    return FieldElem(a, b, d);
}

}  // namespace detail
}  // namespace latq::cli

namespace latq::cli::reports {

inline constexpr std::size_t kLargeRankGate = 12;

inline std::string sig_str(const Signature& s) {
    return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

inline std::string vec_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

inline std::string group_str(const std::vector<Int>& factors) {
    if (factors.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i)
        s += (i ? " x " : "") + std::string("Z/") + to_string(factors[i]);
    return s;
}

inline int cmd_analyze(const ParsedLattice& p, std::ostream& out) {
    if (p.hermitian) {
        const HermitianLattice& h = *p.hermitian;
        QuadraticLattice q = trace_form(h);
        bool integral = h.rank() == 0 || q.is_integral();
        bool even = integral && (h.rank() == 0 || is_even(h));
        Signature s = signature(h);
        auto disc = integral ? discriminant_group(q) : std::vector<Int>{};
        out << "hermitian lattice" << (p.name.empty() ? "" : " " + p.name) << ": d=" << h.d()
            << " rank=" << h.rank() << "\n";
        out << "  integral: " << (integral ? "yes" : "no") << "\n";
        out << "  even: " << (integral ? (even ? "yes" : "no") : "n/a") << "\n";
        out << "  signature: " << sig_str(s) << "\n";
        out << "  trace form: rank " << q.rank() << ", det " << to_string(determinant(q)) << "\n";
        if (integral) out << "  discriminant group: " << group_str(disc) << "\n";
        out << "machine:\n";
        out << "analyze.kind=hermitian\n";
        out << "analyze.d=" << h.d() << "\n";
        out << "analyze.rank=" << h.rank() << "\n";
        out << "analyze.integral=" << (integral ? 1 : 0) << "\n";
        if (integral) out << "analyze.even=" << (even ? 1 : 0) << "\n";
        out << "analyze.signature=" << sig_str(s) << "\n";
        out << "analyze.trace_det=" << to_string(determinant(q)) << "\n";
        if (integral) {
            out << "analyze.discriminant_group=" << group_str(disc) << "\n";
            out << "analyze.ell=" << disc.size() << "\n";
        }
        return kOk;
    }
    const QuadraticLattice& q = *p.quadratic;
    Signature s = signature(q);
    bool even = is_even(q);
    bool uni = is_unimodular(q);
    out << "quadratic lattice" << (p.name.empty() ? "" : " " + p.name) << ": rank=" << q.rank()
        << "\n";
    out << "  signature: " << sig_str(s) << "\n";
    out << "  det: " << to_string(determinant(q)) << "\n";
    out << "  even: " << (even ? "yes" : "no") << ", unimodular: " << (uni ? "yes" : "no")
        << "\n";
    out << "machine:\n";
    out << "analyze.kind=quadratic\n";
    out << "analyze.rank=" << q.rank() << "\n";
    out << "analyze.signature=" << sig_str(s) << "\n";
    out << "analyze.det=" << to_string(determinant(q)) << "\n";
    out << "analyze.even=" << (even ? 1 : 0) << "\n";
    out << "analyze.unimodular=" << (uni ? 1 : 0) << "\n";
    if (q.is_integral()) {
        auto disc = discriminant_group(q);
        out << "analyze.discriminant_group=" << group_str(disc) << "\n";
        out << "analyze.ell=" << disc.size() << "\n";
    }
    return kOk;
}

inline int cmd_roots(const ParsedLattice& p, const std::string& norm_str, bool allow_large,
                     std::ostream& out, std::ostream& err) {
    QuadraticLattice q = p.quadratic ? *p.quadratic : trace_form(*p.hermitian);
    if (!is_definite(q) || q.rank() == 0) {
        err << "error: roots requires a definite lattice of positive rank\n";
        return kInputError;
    }
    if (q.rank() > kLargeRankGate && !allow_large) {
        err << "error: rank " << q.rank() << " exceeds " << kLargeRankGate
            << "; exact enumeration can be slow, pass --allow-large-rank to proceed\n";
        return kInputError;
    }
    Int norm;
    if (norm_str.empty()) {
        Inertia in = inertia(q.gram());
        norm = in.negative > 0 ? -2 : 2;
    } else {
        norm = Int(norm_str);
    }
    ShortVectorReport rep = short_vectors(q, norm);
    out << "vectors of norm " << to_string(norm) << ": " << rep.count_total << " ("
        << rep.vectors.size() << " up to sign)\n";
    if (rep.vectors.size() <= 60)
        for (const auto& v : rep.vectors) out << "  " << vec_str(v) << "\n";
    out << "machine:\n";
    out << "roots.norm=" << to_string(norm) << "\n";
    out << "roots.pairs=" << rep.vectors.size() << "\n";
    out << "roots.count_total=" << rep.count_total << "\n";
    return kOk;
}

inline int cmd_identify(const ParsedLattice& p, std::ostream& out, std::ostream& err) {
    QuadraticLattice q = p.quadratic ? *p.quadratic : trace_form(*p.hermitian);
    if (!is_definite(q)) {
        err << "error: identify requires a definite lattice\n";
        return kInputError;
    }
    RootSystemReport rep = root_system_identify(q);
    out << "root system: " << rep.label() << "\n";
    out << "root span rank " << rep.root_rank << " of " << q.rank()
        << (rep.spans_lattice ? " (spans the lattice up to finite index)" : " (proper sublattice)")
        << "\n";
    out << "machine:\n";
    out << "identify.components=" << rep.label() << "\n";
    out << "identify.root_rank=" << rep.root_rank << "\n";
    out << "identify.spans=" << (rep.spans_lattice ? 1 : 0) << "\n";
    return kOk;
}

inline int cmd_isometric(const ParsedLattice& p1, const ParsedLattice& p2, std::ostream& out,
                         std::ostream& err) {
    QuadraticLattice q1 = p1.quadratic ? *p1.quadratic : trace_form(*p1.hermitian);
    QuadraticLattice q2 = p2.quadratic ? *p2.quadratic : trace_form(*p2.hermitian);
    if (!is_definite(q1) || !is_definite(q2)) {
        err << "error: isometric requires definite lattices\n";
        return kInputError;
    }
    bool iso = is_isometric(q1, q2);
    out << (iso ? "isometric" : "not isometric") << "\n";
    out << "machine:\nisometric.result=" << (iso ? 1 : 0) << "\n";
    return iso ? kOk : kHypothesisFailed;
}

inline int cmd_complement(const ParsedLattice& ambient, const std::string& sub_text,
                          std::ostream& out, std::ostream& err) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(sub_text);
    } catch (const nlohmann::json::parse_error& e) {
        err << "error: sub-basis JSON parse error at byte " << e.byte << ": " << e.what() << "\n";
        return kInputError;
    }
    if (!j.contains("vectors") || !j.at("vectors").is_array()) {
        err << "error: sub-basis file needs a \"vectors\" array\n";
        return kInputError;
    }
    if (ambient.quadratic) {
        const QuadraticLattice& q = *ambient.quadratic;
        const auto& vecs = j.at("vectors");
        IMat basis(q.rank(), vecs.size());
        for (std::size_t c = 0; c < vecs.size(); ++c) {
            if (!vecs.at(c).is_array() || vecs.at(c).size() != q.rank()) {
                err << "error: vectors[" << c << "]: expected " << q.rank() << " integers\n";
                return kInputError;
            }
            for (std::size_t i = 0; i < q.rank(); ++i) {
                if (!vecs.at(c).at(i).is_number_integer()) {
                    err << "error: vectors[" << c << "][" << i << "]: expected an integer\n";
                    return kInputError;
                }
                basis(i, c) = Int(static_cast<long>(vecs.at(c).at(i).get<long long>()));
            }
        }
        Sublattice sub{q, basis};
        Sublattice comp = orthogonal_complement(sub);
        QuadraticLattice res = comp.restricted();
        out << "complement rank " << comp.rank() << "\n";
        if (comp.rank() > 0 && det(res.gram()) != 0)
            out << "signature " << sig_str(signature(res)) << "\n";
        out << "machine:\n";
        out << "complement.rank=" << comp.rank() << "\n";
        for (std::size_t c = 0; c < comp.rank(); ++c)
            out << "complement.basis." << c << "=" << vec_str(comp.basis.col(c)) << "\n";
        for (std::size_t i = 0; i < res.rank(); ++i) {
            out << "complement.gram." << i << "=(";
            for (std::size_t k = 0; k < res.rank(); ++k)
                out << (k ? "," : "") << to_string(res.gram()(i, k));
            out << ")\n";
        }
        return kOk;
    }
    const HermitianLattice& h = *ambient.hermitian;
    const auto& vecs = j.at("vectors");
    std::vector<FVec> sub;
    for (std::size_t c = 0; c < vecs.size(); ++c) {
        if (!vecs.at(c).is_array() || vecs.at(c).size() != h.rank()) {
            err << "error: vectors[" << c << "]: expected " << h.rank() << " entries\n";
            return kInputError;
        }
        FVec v;
        for (std::size_t i = 0; i < h.rank(); ++i)
            v.push_back(detail::parse_field_entry(
                vecs.at(c).at(i), h.d(),
                "vectors[" + std::to_string(c) + "][" + std::to_string(i) + "]"));
        sub.push_back(std::move(v));
    }
    HermitianComplement comp = hermitian_complement(h, sub);
    out << "hermitian complement rank " << comp.lattice.rank() << "\n";
    out << "signature " << sig_str(signature(comp.lattice)) << "\n";
    out << "machine:\n";
    out << "complement.rank=" << comp.lattice.rank() << "\n";
    for (std::size_t c = 0; c < comp.basis.cols(); ++c) {
        out << "complement.basis." << c << "=(";
        for (std::size_t i = 0; i < comp.basis.rows(); ++i)
            out << (i ? "," : "") << comp.basis(i, c).str();
        out << ")\n";
    }
    for (std::size_t i = 0; i < comp.lattice.rank(); ++i) {
        out << "complement.gram." << i << "=(";
        for (std::size_t k = 0; k < comp.lattice.rank(); ++k)
            out << (k ? "," : "") << comp.lattice.gram()(i, k).str();
        out << ")\n";
    }
    return kOk;
}

inline int cmd_age(const EigenvalueProfile& p, std::ostream& out) {
    Rat a = age(p);
    bool qr = is_quasi_reflection(p);
    bool refl = is_reflection(p);
    out << "age = " << to_string(a) << "\n";
    out << "quasi-reflection: " << (qr ? "yes" : "no") << ", reflection: "
        << (refl ? "yes" : "no") << "\n";
    out << "machine:\n";
    out << "age.value=" << to_string(a) << "\n";
    out << "age.quasi_reflection=" << (qr ? 1 : 0) << "\n";
    out << "age.reflection=" << (refl ? 1 : 0) << "\n";
    return kOk;
}

inline int cmd_rst_scan(unsigned long n_min, unsigned long n_max, std::ostream& out,
                        std::ostream& err) {
    if (n_min == 0 || n_max < n_min) {
        err << "error: need 1 <= n-min <= n-max\n";
        return kInputError;
    }
    bool below_one = false;
    std::string machine;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        RstScanResult r = rst_min_age(n);
        out << "n=" << n << ": min age " << to_string(r.min_age);
        out << "  [witness r=" << r.witness.r << " k2=" << r.witness.k2;
        for (const auto& [d, mult] : r.witness.v)
            if (mult > 0) out << " v" << d << "=" << mult;
        out << "]";
        if (r.min_age < 1) {
            out << "  BELOW 1";
            below_one = true;
        }
        out << "\n";
        machine += "rst." + std::to_string(n) + ".min=" + to_string(r.min_age) + "\n";
    }
    out << "cases r in {1,2} satisfy age >= 1 by eigenvalue pairing; phi(r) > 2 is covered by"
           " the seisu certification\n";
    out << "machine:\n" << machine;
    return below_one ? kHypothesisFailed : kOk;
}

inline int cmd_seisu(unsigned long r_max, std::ostream& out) {
    SeisuReport rep = seisu_verify(r_max);
    out << "checked " << rep.pairs_checked << " (r,k2) pairs for r <= " << rep.r_max << ": "
        << rep.violations.size() << " violations\n";
    for (const auto& v : rep.violations)
        out << "  VIOLATION r=" << v.r << " k2=" << v.k2 << " sum=" << to_string(v.value) << "\n";
    out << "witnesses a in (r/4, 3r/4) coprime to r:\n";
    for (const auto& [r, ws] : rep.witnesses) {
        out << "  r=" << r << ":";
        for (unsigned long a : ws) out << " " << a;
        out << "\n";
    }
    out << "machine:\n";
    out << "seisu.r_max=" << rep.r_max << "\n";
    out << "seisu.pairs_checked=" << rep.pairs_checked << "\n";
    out << "seisu.violations=" << rep.violations.size() << "\n";
    for (const auto& [r, ws] : rep.witnesses) {
        out << "seisu.witness." << r << "=";
        for (std::size_t i = 0; i < ws.size(); ++i) out << (i ? "," : "") << ws[i];
        out << "\n";
    }
    return rep.violations.empty() ? kOk : kHypothesisFailed;
}

inline const char* candidate_status_str(CandidateStatus s) {
    switch (s) {
        case CandidateStatus::Satisfies: return "satisfies";
        case CandidateStatus::Eliminated: return "eliminated";
        case CandidateStatus::EliminatedOdd: return "eliminated-odd";
        case CandidateStatus::Violates: return "VIOLATES";
        default: return "unverified";
    }
}

inline void print_verdict(const EmbeddingCase& c, const Verdict& v, std::ostream& out) {
    out << "case " << c.name << " (d=" << c.field_d << ", n=" << v.n << ")\n";
    for (const auto& ch : v.checks)
        out << "  " << (ch.pass ? "ok  " : "FAIL") << " " << ch.name
            << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    for (const auto& r : v.reflective.results) {
        out << "  candidate " << r.label << ": " << candidate_status_str(r.status);
        if (!r.instance_root_counts.empty()) {
            out << " (roots";
            for (std::size_t rc : r.instance_root_counts) out << " " << rc;
            out << " vs " << v.reflective.s_perp_roots << ")";
        }
        if (!r.note.empty()) out << " [" << r.note << "]";
        out << "\n";
    }
    out << "  assumption (*): "
        << (v.star_assumed ? "assumed (a root of the pulled-back form vanishes at every cusp"
                             " with order >= 1; not verified by this tool)"
                           : "NOT assumed")
        << "\n";
    out << "verdict: " << to_string(v.status) << "\n";
    if (!v.failed_conditions.empty()) {
        out << "failed conditions:";
        for (const auto& f : v.failed_conditions) out << " " << f;
        out << "\n";
    }
    out << "machine:\n";
    out << "case.name=" << c.name << "\n";
    out << "case.d=" << c.field_d << "\n";
    out << "case.n=" << v.n << "\n";
    out << "case.root_count=" << v.root_count << "\n";
    out << "case.weight=" << to_string(v.weight) << "\n";
    if (v.root_weight) out << "case.root_weight=" << to_string(*v.root_weight) << "\n";
    out << "case.complement=" << v.complement_label << "\n";
    out << "case.star_assumed=" << (v.star_assumed ? 1 : 0) << "\n";
    out << "case.verdict=" << to_string(v.status) << "\n";
}

inline int cmd_general_type(const EmbeddingCase& c, std::ostream& out) {
    Verdict v = run_case(c);
    print_verdict(c, v, out);
    return v.status == VerdictStatus::GeneralTypeConditionalOnStar ? kOk : kHypothesisFailed;
}

inline int cmd_catalog(bool verify, std::ostream& out) {
    std::vector<EmbeddingCase> cases = catalog();
    if (!verify) {
        out << "built-in cases:\n";
        for (const auto& c : cases)
            out << "  " << c.name << ": d=" << c.field_d << " complement "
                << c.expected_complement << "(-1), weight " << to_string(c.expected_weight)
                << ", root weight " << to_string(c.expected_root_weight) << ", n=" << c.n
                << "\n";
        out << "machine:\n";
        out << "catalog.size=" << cases.size() << "\n";
        for (const auto& c : cases) out << "catalog.case=" << c.name << "\n";
        return kOk;
    }
    std::size_t passed = 0;
    std::string machine;
    for (const auto& c : cases) {
        Verdict v = run_case(c);
        bool ok = v.status == VerdictStatus::GeneralTypeConditionalOnStar;
        if (ok) ++passed;
        out << (ok ? "PASS " : "FAIL ") << c.name << ": " << to_string(v.status)
            << " (complement " << v.complement_label << "(-1), roots " << v.root_count
            << ", weight " << to_string(v.weight);
        if (v.root_weight) out << ", root weight " << to_string(*v.root_weight);
        out << ", n=" << v.n << ")\n";
        if (!ok)
            for (const auto& f : v.failed_conditions) out << "     failed: " << f << "\n";
        machine += "catalog." + c.name + "=" + to_string(v.status) + "\n";
    }
    out << passed << "/" << cases.size() << " cases verified";
    if (passed == cases.size())
        out << "; every verdict is conditional on the cusp-vanishing assumption (*)";
    out << "\n";
    out << "machine:\n" << machine;
    out << "catalog.passed=" << passed << "\n";
    out << "catalog.total=" << cases.size() << "\n";
    return passed == cases.size() ? kOk : kHypothesisFailed;
}

}  // namespace latq::cli::reports
