#ifndef SURVIVAL_IO_HPP
#define SURVIVAL_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "survival/builder.hpp"
#include "survival/complex.hpp"
#include "survival/fibre.hpp"
#include "survival/socle.hpp"

namespace survival {

/**
 * A parsed ideal file: the raw source, the declared variable context, and
 * the generator list as written (before minimalization).
 */
struct IdealDocument {
    std::string source;
    VarContext context;
    std::vector<Monomial> generators;
};

// Grammar:
//   file     := "vars" ":" varlist NL "ideal" ":" genlist
//   varlist  := ident ("," ident)*
//   genlist  := monomial ("," monomial)*
//   monomial := factor ("*" factor)*
//   factor   := ident ("^" posint)?
// Whitespace around tokens is ignored; "#" comments to end of line.
// Generators are validated (no constants, no degree-1 monomials).
IdealDocument parse_ideal(std::string_view text);

// Comma-separated monomial list in the same monomial grammar; the context
// is the variables in order of first occurrence. Antichain-validated.
SocleSpec parse_socle_spec(std::string_view text);

// Canonical document text: "vars: ...\nideal: ...\n" with generators as
// given, comma-space separated.
std::string serialize_ideal(const VarContext& ctx,
                            const std::vector<Monomial>& gens);

inline std::string serialize_ideal(const MonomialIdeal& ideal) {
    return serialize_ideal(ideal.context(), ideal.min_gens());
}

struct ComponentReport {
    std::string kind;  // "Nontrivial" | "TriviallyConnected" | "QuasiTriviallyConnected"
    std::vector<std::string> vertices;
};

struct AnalysisReport {
    std::vector<std::string> variables;
    std::vector<std::string> minimal_generators;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::string> truly_isolated;
    std::vector<std::string> quasi_isolated;
    std::size_t socle_dimension = 0;
    bool is_gorenstein = false;
    bool is_pure_power = false;
    bool is_complete_intersection = false;
    std::vector<ComponentReport> components;
    std::vector<std::string> fibre_factors;  // ideal documents
};

AnalysisReport analyze(const SurvivalComplex& c);

enum class ReportFormat { Json, Text };

std::string emit_report(const AnalysisReport& report, ReportFormat format);

enum class DotGraph { Skeleton, ZeroDivisor };

// Undirected DOT with default attributes, nodes and edges in canonical order.
std::string emit_dot(const SurvivalComplex& c, DotGraph which);

// Full command dispatch. Exit codes: 0 ok, 1 input error, 2 cap exceeded,
// 3 invariant violation (check).
int run_cli(int argc, const char* const* argv);

}  // namespace survival

#endif
