#include "survival/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace survival {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { Ident, Number, Comma, Colon, Star, Caret, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blanks();
        std::size_t line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        char c = src_[pos_];
        if (c == '\n') {
            advance();
            return {Tok::Newline, "\n", line, col};
        }
        if (c == ',') { advance(); return {Tok::Comma, ",", line, col}; }
        if (c == ':') { advance(); return {Tok::Colon, ":", line, col}; }
        if (c == '*') { advance(); return {Tok::Star, "*", line, col}; }
        if (c == '^') { advance(); return {Tok::Caret, "^", line, col}; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t += src_[pos_];
                advance();
            }
            return {Tok::Number, std::move(t), line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_')) {
                t += src_[pos_];
                advance();
            }
            return {Tok::Ident, std::move(t), line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void skip_blanks() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { shift(); }

    const Token& peek() const { return tok_; }

    Token expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind)
            throw ParseError("expected " + what + ", got '" + describe(tok_) + "'",
                             tok_.line, tok_.col);
        Token t = tok_;
        shift();
        return t;
    }

    Token expect_keyword(const std::string& kw) {
        Token t = expect(Tok::Ident, "'" + kw + "'");
        if (t.text != kw)
            throw ParseError("expected '" + kw + "', got '" + t.text + "'", t.line,
                             t.col);
        return t;
    }

    void shift() { tok_ = lex_.next(); }

    void skip_newlines() {
        while (tok_.kind == Tok::Newline) shift();
    }

    // monomial as (name, exponent, position) factors; exponents of repeated
    // names accumulate when materialized
    struct RawFactor {
        std::string name;
        unsigned exp;
        std::size_t line, col;
    };

    std::vector<RawFactor> monomial() {
        std::vector<RawFactor> factors;
        for (;;) {
            Token id = expect(Tok::Ident, "a variable name");
            unsigned exp = 1;
            if (tok_.kind == Tok::Caret) {
                shift();
                Token num = expect(Tok::Number, "an exponent");
                unsigned long v = std::stoul(num.text);
                if (v == 0 || v > 1000000)
                    throw ParseError("exponent out of range: " + num.text, num.line,
                                     num.col);
                exp = static_cast<unsigned>(v);
            }
            factors.push_back({id.text, exp, id.line, id.col});
            if (tok_.kind != Tok::Star) break;
            shift();
        }
        return factors;
    }

private:
    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input"
               : t.kind == Tok::Newline ? "end of line"
                                        : t.text;
    }

    Lexer lex_;
    Token tok_{Tok::End, "", 1, 1};
};

Monomial materialize(const std::vector<Parser::RawFactor>& factors,
                     const VarContext& ctx) {
    std::vector<unsigned> exps(ctx.size(), 0);
    for (const auto& f : factors) {
        auto idx = ctx.index_of(f.name);
        if (!idx)
            throw ParseError("unknown variable '" + f.name + "'", f.line, f.col);
        exps[*idx] += f.exp;
    }
    return Monomial(std::move(exps));
}

}  // namespace

IdealDocument parse_ideal(std::string_view text) {
    Parser p(text);
    p.skip_newlines();
    p.expect_keyword("vars");
    p.expect(Tok::Colon, "':'");

    std::vector<std::string> names;
    for (;;) {
        Token id = p.expect(Tok::Ident, "a variable name");
        if (std::find(names.begin(), names.end(), id.text) != names.end())
            throw ParseError("duplicate variable declaration '" + id.text + "'",
                             id.line, id.col);
        names.push_back(id.text);
        if (p.peek().kind != Tok::Comma) break;
        p.shift();
    }
    if (p.peek().kind != Tok::Newline)
        p.expect(Tok::Newline, "end of the vars line");
    p.skip_newlines();
    VarContext ctx(std::move(names));

    p.expect_keyword("ideal");
    p.expect(Tok::Colon, "':'");
    std::vector<Monomial> gens;
    for (;;) {
        Token at = p.peek();
        Monomial m = materialize(p.monomial(), ctx);
        unsigned d = m.degree();
        if (d == 0)
            throw ParseError("constant generator", at.line, at.col);
        if (d == 1)
            throw ParseError("degree-1 generator '" + to_string(ctx, m) + "'",
                             at.line, at.col);
        gens.push_back(std::move(m));
        if (p.peek().kind != Tok::Comma) break;
        p.shift();
        p.skip_newlines();  // a generator list may wrap after a comma
    }
    p.skip_newlines();
    p.expect(Tok::End, "end of input");

    return IdealDocument{std::string(text), std::move(ctx), std::move(gens)};
}

SocleSpec parse_socle_spec(std::string_view text) {
    Parser p(text);
    p.skip_newlines();

    std::vector<std::vector<Parser::RawFactor>> raw;
    std::vector<std::string> names;  // first-occurrence order
    for (;;) {
        raw.push_back(p.monomial());
        for (const auto& f : raw.back())
            if (std::find(names.begin(), names.end(), f.name) == names.end())
                names.push_back(f.name);
        if (p.peek().kind != Tok::Comma) break;
        p.shift();
        p.skip_newlines();
    }
    p.skip_newlines();
    p.expect(Tok::End, "end of input");

    VarContext ctx(std::move(names));
    std::vector<Monomial> monomials;
    for (const auto& factors : raw) monomials.push_back(materialize(factors, ctx));
    return make_socle_spec(std::move(ctx), std::move(monomials));
}

std::string serialize_ideal(const VarContext& ctx,
                            const std::vector<Monomial>& gens) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i) out += ", ";
        out += ctx.name(i);
    }
    out += "\nideal: ";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += to_string(ctx, gens[i]);
    }
    out += '\n';
    return out;
}

AnalysisReport analyze(const SurvivalComplex& c) {
    const auto& ctx = c.context();
    AnalysisReport r;
    r.variables = ctx.names();
    for (const auto& g : c.ring().ideal.min_gens())
        r.minimal_generators.push_back(to_string(ctx, g));
    r.vertex_count = c.vertices().size();
    r.edge_count = c.edges().size();
    for (std::size_t i = 0; i < c.vertices().size(); ++i) {
        if (c.classification()[i] == VertexClass::TrulyIsolated)
            r.truly_isolated.push_back(to_string(ctx, c.vertices()[i]));
        else if (c.classification()[i] == VertexClass::QuasiIsolated)
            r.quasi_isolated.push_back(to_string(ctx, c.vertices()[i]));
    }
    r.socle_dimension = r.truly_isolated.size();
    r.is_gorenstein = r.socle_dimension == 1;
    r.is_pure_power = is_pure_power(c.ring().ideal);
    r.is_complete_intersection = is_complete_intersection(c.ring().ideal);
    for (const auto& comp : c.components()) {
        ComponentReport cr;
        cr.kind = comp.kind == ComponentKind::Nontrivial ? "Nontrivial"
                  : comp.kind == ComponentKind::TriviallyConnected
                      ? "TriviallyConnected"
                      : "QuasiTriviallyConnected";
        for (std::size_t v : comp.vertices)
            cr.vertices.push_back(to_string(ctx, c.vertices()[v]));
        r.components.push_back(std::move(cr));
    }
    for (const auto& f : decompose(c).factors)
        r.fibre_factors.push_back(serialize_ideal(f.ideal));
    return r;
}

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["variables"] = report.variables;
        j["minimal_generators"] = report.minimal_generators;
        j["vertex_count"] = report.vertex_count;
        j["edge_count"] = report.edge_count;
        j["truly_isolated"] = report.truly_isolated;
        j["quasi_isolated"] = report.quasi_isolated;
        j["socle_dimension"] = report.socle_dimension;
        j["is_gorenstein"] = report.is_gorenstein;
        j["is_pure_power"] = report.is_pure_power;
        j["is_complete_intersection"] = report.is_complete_intersection;
        j["components"] = nlohmann::ordered_json::array();
        for (const auto& comp : report.components) {
            nlohmann::ordered_json jc;
            jc["kind"] = comp.kind;
            jc["vertices"] = comp.vertices;
            j["components"].push_back(std::move(jc));
        }
        j["fibre_factors"] = report.fibre_factors;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += v[i];
        }
        return s;
    };
    os << "variables: " << join(report.variables) << '\n';
    os << "minimal generators: " << join(report.minimal_generators) << '\n';
    os << "vertices: " << report.vertex_count << '\n';
    os << "edges: " << report.edge_count << '\n';
    os << "truly isolated: " << join(report.truly_isolated) << '\n';
    os << "quasi isolated: " << join(report.quasi_isolated) << '\n';
    os << "socle dimension: " << report.socle_dimension << '\n';
    os << "gorenstein: " << (report.is_gorenstein ? "yes" : "no") << '\n';
    os << "pure power: " << (report.is_pure_power ? "yes" : "no") << '\n';
    os << "complete intersection: "
       << (report.is_complete_intersection ? "yes" : "no") << '\n';
    os << "components (" << report.components.size() << "):\n";
    for (const auto& comp : report.components)
        os << "  [" << comp.kind << "] " << join(comp.vertices) << '\n';
    os << "fibre factors (" << report.fibre_factors.size() << "):\n";
    for (const auto& f : report.fibre_factors) {
        std::istringstream lines(f);
        std::string line;
        while (std::getline(lines, line)) os << "  " << line << '\n';
    }
    return os.str();
}

std::string emit_dot(const SurvivalComplex& c, DotGraph which) {
    const auto& ctx = c.context();
    std::ostringstream os;
    os << "graph " << (which == DotGraph::Skeleton ? "skeleton" : "zero_divisor")
       << " {\n";
    for (const auto& v : c.vertices()) os << "  \"" << to_string(ctx, v) << "\";\n";
    const auto edges =
        which == DotGraph::Skeleton ? c.edges() : zero_divisor_graph(c);
    for (const auto& [i, j] : edges)
        os << "  \"" << to_string(ctx, c.vertices()[i]) << "\" -- \""
           << to_string(ctx, c.vertices()[j]) << "\";\n";
    os << "}\n";
    return os.str();
}

// ------------------------------------------------------------------- CLI

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SurvivalComplex complex_from_file(const std::string& path, const Caps& caps) {
    auto doc = parse_ideal(read_file(path));
    auto ideal = minimalize(doc.context, doc.generators);
    return build_complex(enumerate_survivors(ideal, caps.max_vertices), caps);
}

// Recomputes every module-level invariant from scratch against the input.
// Returns the list of violations (empty means the input checks out).
std::vector<std::string> run_invariant_suite(const SurvivalComplex& c) {
    std::vector<std::string> bad;
    const auto& ideal = c.ring().ideal;
    const auto& vs = c.vertices();
    const auto& ctx = c.context();
    const std::size_t n = ctx.size();

    auto var = [&](std::size_t i) {
        std::vector<unsigned> e(n, 0);
        e[i] = 1;
        return Monomial(std::move(e));
    };

    // survivors are exactly the complement of the ideal within the box
    {
        std::size_t expected = 0;
        Monomial cur(std::vector<unsigned>(n, 0));
        const auto& bounds = c.ring().exponent_bounds;
        bool done = false;
        while (!done) {
            if (!cur.is_constant() && !ideal.contains(cur)) ++expected;
            std::size_t i = n;
            done = true;
            while (i > 0) {
                --i;
                if (cur.exps[i] + 1 < bounds[i]) {
                    ++cur.exps[i];
                    done = false;
                    break;
                }
                cur.exps[i] = 0;
            }
        }
        if (expected != vs.size())
            bad.push_back("survivor set is not the complement of the ideal");
    }

    // edge definition and skeleton/zero-divisor partition
    {
        auto zd = zero_divisor_graph(c);
        std::size_t pairs = vs.size() * (vs.size() - 1) / 2;
        if (c.edges().size() + zd.size() != pairs)
            bad.push_back("skeleton and zero-divisor edges do not partition pairs");
        for (const auto& [i, j] : c.edges())
            if (ideal.contains(multiply(vs[i], vs[j])))
                bad.push_back("edge with dead product: " + to_string(ctx, vs[i]) +
                              ", " + to_string(ctx, vs[j]));
        for (const auto& [i, j] : zd)
            if (!ideal.contains(multiply(vs[i], vs[j])))
                bad.push_back("zero-divisor edge with live product");
    }

    // classification against first-principles definitions
    std::vector<std::size_t> truly;
    for (std::size_t v = 0; v < vs.size(); ++v) {
        bool ti = true;
        for (std::size_t i = 0; i < n && ti; ++i)
            ti = ideal.contains(multiply(vs[v], var(i)));
        if (ti) truly.push_back(v);
        VertexClass expect =
            ti ? VertexClass::TrulyIsolated
               : (c.adjacency()[v].empty() &&
                          !ideal.contains(multiply(vs[v], vs[v]))
                      ? VertexClass::QuasiIsolated
                      : VertexClass::Connected);
        if (c.classification()[v] != expect)
            bad.push_back("misclassified vertex " + to_string(ctx, vs[v]));
    }

    // at least one isolated point; every vertex divides a truly isolated one
    {
        bool any = std::any_of(c.classification().begin(), c.classification().end(),
                               [](VertexClass k) { return k != VertexClass::Connected; });
        if (!any) bad.push_back("no isolated point");
        for (const auto& v : vs) {
            bool factor = std::any_of(truly.begin(), truly.end(), [&](std::size_t t) {
                return divides(v, vs[t]);
            });
            if (!factor)
                bad.push_back("vertex " + to_string(ctx, v) +
                              " divides no truly isolated vertex");
        }
    }

    // component labels, and variable-disjointness across nontrivial or
    // quasi-trivially connected components
    {
        std::vector<std::vector<bool>> comp_vars;
        for (const auto& comp : c.components()) {
            ComponentKind expect =
                comp.vertices.size() > 1 ? ComponentKind::Nontrivial
                : c.classification()[comp.vertices[0]] == VertexClass::QuasiIsolated
                    ? ComponentKind::QuasiTriviallyConnected
                    : ComponentKind::TriviallyConnected;
            if (comp.kind != expect) bad.push_back("mislabeled component");
            std::vector<bool> used(n, false);
            for (std::size_t v : comp.vertices)
                for (std::size_t i = 0; i < n; ++i)
                    if (vs[v].exps[i] > 0) used[i] = true;
            comp_vars.push_back(std::move(used));
        }
        for (std::size_t a = 0; a < c.components().size(); ++a) {
            for (std::size_t b = a + 1; b < c.components().size(); ++b) {
                auto counts = [&](std::size_t k) {
                    auto kind = c.components()[k].kind;
                    return kind != ComponentKind::TriviallyConnected;
                };
                if (!counts(a) || !counts(b)) continue;
                for (std::size_t i = 0; i < n; ++i)
                    if (comp_vars[a][i] && comp_vars[b][i])
                        bad.push_back("components share variable " + ctx.name(i));
            }
        }
    }

    // fibre decomposition round trip
    {
        auto fac = decompose(c);
        if (!check_pairwise_products(c, fac.variable_partition))
            bad.push_back("decomposition partition fails pairwise products");
        if (fac.factors.size() >= 2) {
            auto recombined = fibre_product(fac.factors);
            if (!(reindex(recombined.ideal, ctx) == ideal))
                bad.push_back("decompose/fibre_product round trip changed the ideal");
        } else if (!(fac.factors.at(0).ideal == ideal)) {
            bad.push_back("single-factor decomposition changed the ideal");
        }
    }

    return bad;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"survival complexes of Artinian monomial rings"};
    app.require_subcommand(1);

    Caps caps;
    app.add_option("--max-vertices", caps.max_vertices, "vertex cap")
        ->envname("SURVIVAL_MAX_VERTICES");
    app.add_option("--max-edges", caps.max_edges, "edge cap");
    app.add_option("--max-facets", caps.max_facets, "facet cap");

    std::string file;
    bool json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "full report for an ideal file");
    analyze_cmd->add_option("file", file, "ideal file")->required();
    analyze_cmd->add_flag("--json", json, "emit JSON instead of text");

    auto* facets_cmd = app.add_subcommand("facets", "maximal faces, one per line");
    facets_cmd->add_option("file", file, "ideal file")->required();

    std::string which = "skeleton";
    auto* dot_cmd = app.add_subcommand("export-dot", "DOT graph to stdout");
    dot_cmd->add_option("file", file, "ideal file")->required();
    dot_cmd->add_option("--which", which, "skeleton or zero_divisor")
        ->check(CLI::IsMember({"skeleton", "zero_divisor"}));

    std::string alg = "general";
    std::string socle_text;
    auto* build_cmd = app.add_subcommand("build", "construct an ideal from a socle spec");
    build_cmd->add_option("--alg", alg, "general, planar, or slab")
        ->check(CLI::IsMember({"general", "planar", "slab"}));
    build_cmd->add_option("--socle", socle_text, "comma-separated monomials")
        ->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "fibre factors as ideal documents");
    decompose_cmd->add_option("file", file, "ideal file")->required();

    auto* check_cmd = app.add_subcommand("check", "run the invariant suite");
    check_cmd->add_option("file", file, "ideal file")->required();

    // cap flags may follow the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (analyze_cmd->parsed()) {
            auto c = complex_from_file(file, caps);
            std::cout << emit_report(analyze(c),
                                     json ? ReportFormat::Json : ReportFormat::Text);
        } else if (facets_cmd->parsed()) {
            auto c = complex_from_file(file, caps);
            for (const auto& face : facets(c, caps.max_facets)) {
                for (std::size_t k = 0; k < face.size(); ++k) {
                    if (k) std::cout << ' ';
                    std::cout << to_string(c.context(), c.vertices()[face[k]]);
                }
                std::cout << '\n';
            }
        } else if (dot_cmd->parsed()) {
            auto c = complex_from_file(file, caps);
            std::cout << emit_dot(c, which == "skeleton" ? DotGraph::Skeleton
                                                         : DotGraph::ZeroDivisor);
        } else if (build_cmd->parsed()) {
            auto spec = parse_socle_spec(socle_text);
            QuotientRing ring =
                alg == "general"  ? build_general(spec, caps.max_vertices)
                : alg == "planar" ? build_planar(spec, caps.max_vertices)
                                  : build_slab(spec, caps.max_vertices).ring;
            std::cout << serialize_ideal(ring.ideal);
        } else if (decompose_cmd->parsed()) {
            auto c = complex_from_file(file, caps);
            auto fac = decompose(c);
            for (std::size_t i = 0; i < fac.factors.size(); ++i) {
                if (i) std::cout << '\n';
                std::cout << serialize_ideal(fac.factors[i].ideal);
            }
        } else if (check_cmd->parsed()) {
            auto c = complex_from_file(file, caps);
            auto violations = run_invariant_suite(c);
            for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
            if (!violations.empty()) return 3;
            std::cout << "ok\n";
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace survival
