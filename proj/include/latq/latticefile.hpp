#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hermitian.hpp"
#include "quadratic.hpp"

namespace latq {

/// Parse or validation failure, annotated with the JSON path that caused it.
struct LatticeFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedLattice {
    std::string kind;  // "hermitian" or "quadratic"
    std::string name;
    std::optional<HermitianLattice> hermitian;
    std::optional<QuadraticLattice> quadratic;
};

namespace detail {

inline Int json_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw LatticeFileError(where + ": expected an integer (decimal floats are rejected)");
    return Int(static_cast<long>(j.get<long long>()));
}

inline Rat entry_rat(const nlohmann::json& j, const std::string& where, const char* num_key,
                     const char* den_key) {
    Int num = j.contains(num_key) ? json_int(j.at(num_key), where + "." + num_key) : Int(0);
    Int den = j.contains(den_key) ? json_int(j.at(den_key), where + "." + den_key) : Int(1);
    if (den <= 0) throw LatticeFileError(where + ": denominator must be positive");
    return make_rat(num, den);
}

inline long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw LatticeFileError("entry too large for the file format");
    return v.get_si();
}

}  // namespace detail

inline ParsedLattice parse_lattice(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LatticeFileError(std::string("JSON parse error at byte ") +
                               std::to_string(e.byte) + ": " + e.what());
    }
    ParsedLattice out;
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw LatticeFileError("kind: expected \"hermitian\" or \"quadratic\"");
    out.kind = j.at("kind").get<std::string>();
    if (j.contains("name")) out.name = j.at("name").get<std::string>();
    if (!j.contains("rank")) throw LatticeFileError("rank: missing");
    long rank = static_cast<long>(detail::json_int(j.at("rank"), "rank").get_si());
    if (rank < 0) throw LatticeFileError("rank: must be non-negative");
    if (!j.contains("gram") || !j.at("gram").is_array())
        throw LatticeFileError("gram: expected a matrix");
    const auto& gram = j.at("gram");
    if (static_cast<long>(gram.size()) != rank)
        throw LatticeFileError("gram: row count differs from rank");

    auto cell = [&](std::size_t i, std::size_t k) -> const nlohmann::json& {
        const auto& row = gram.at(i);
        if (!row.is_array() || static_cast<long>(row.size()) != rank)
            throw LatticeFileError("gram[" + std::to_string(i) + "]: expected " +
                                   std::to_string(rank) + " entries");
        return row.at(k);
    };
    auto where = [&](std::size_t i, std::size_t k) {
        return "gram[" + std::to_string(i) + "][" + std::to_string(k) + "]";
    };

    if (out.kind == "quadratic") {
        QMat g(rank, rank);
        for (long i = 0; i < rank; ++i)
            for (long k = 0; k < rank; ++k)
                g(i, k) = detail::entry_rat(cell(i, k), where(i, k), "a_num", "a_den");
        try {
            out.quadratic = QuadraticLattice(g);
        } catch (const std::exception& e) {
            throw LatticeFileError(std::string("gram: ") + e.what());
        }
        if (rank > 0 && det(g) == 0) throw LatticeFileError("gram: degenerate form");
    } else if (out.kind == "hermitian") {
        if (!j.contains("d")) throw LatticeFileError("d: missing for a hermitian lattice");
        long d = static_cast<long>(detail::json_int(j.at("d"), "d").get_si());
        if (d >= 0 || !is_squarefree(Int(d)))
            throw LatticeFileError("d: must be a negative squarefree integer");
        FMat g(rank, rank, FieldElem::zero(d));
        for (long i = 0; i < rank; ++i)
            for (long k = 0; k < rank; ++k) {
                Rat a = detail::entry_rat(cell(i, k), where(i, k), "a_num", "a_den");
                Rat b = detail::entry_rat(cell(i, k), where(i, k), "b_num", "b_den");
                g(i, k) = FieldElem(a, b, d);
            }
        try {
            out.hermitian = HermitianLattice(d, g);
        } catch (const std::exception& e) {
            throw LatticeFileError(std::string("gram: ") + e.what());
        }
        if (rank > 0 && det(trace_form(*out.hermitian).gram()) == 0)
            throw LatticeFileError("gram: degenerate form");
    } else {
        throw LatticeFileError("kind: must be \"hermitian\" or \"quadratic\"");
    }
    return out;
}

inline std::string emit_quadratic(const QuadraticLattice& q, const std::string& name = "") {
    nlohmann::json j;
    j["kind"] = "quadratic";
    if (!name.empty()) j["name"] = name;
    j["rank"] = q.rank();
    nlohmann::json gram = nlohmann::json::array();
    for (std::size_t i = 0; i < q.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < q.rank(); ++k) {
            nlohmann::json e;
            e["a_num"] = detail::to_ll(q.gram()(i, k).get_num());
            e["a_den"] = detail::to_ll(q.gram()(i, k).get_den());
            row.push_back(e);
        }
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j.dump(2) + "\n";
}

inline std::string emit_hermitian(const HermitianLattice& h, const std::string& name = "") {
    nlohmann::json j;
    j["kind"] = "hermitian";
    if (!name.empty()) j["name"] = name;
    j["d"] = h.d();
    j["rank"] = h.rank();
    nlohmann::json gram = nlohmann::json::array();
    for (std::size_t i = 0; i < h.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < h.rank(); ++k) {
            const FieldElem& v = h.gram()(i, k);
            nlohmann::json e;
            e["a_num"] = detail::to_ll(v.a.get_num());
            e["a_den"] = detail::to_ll(v.a.get_den());
            e["b_num"] = detail::to_ll(v.b.get_num());
            e["b_den"] = detail::to_ll(v.b.get_den());
            row.push_back(e);
        }
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j.dump(2) + "\n";
}

}  // namespace latq
