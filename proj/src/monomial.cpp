#include "survival/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace survival {

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void require_same_context(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw ContextMismatch("monomials belong to different variable contexts");
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("variable context must have at least one variable");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n))
            throw std::invalid_argument("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: '" + n + "'");
    }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (unsigned e : exps) {
        if (d > std::numeric_limits<unsigned>::max() - e)
            throw std::overflow_error("monomial degree overflow");
        d += e;
    }
    return d;
}

std::size_t Monomial::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(exps.begin(), exps.end(), [](unsigned e) { return e > 0; }));
}

std::optional<std::size_t> Monomial::pure_power_var() const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (found) return std::nullopt;
        found = i;
    }
    return found;
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    Monomial out;
    out.exps.reserve(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] > std::numeric_limits<unsigned>::max() - b.exps[i])
            throw std::overflow_error("monomial exponent overflow in multiply");
        out.exps.push_back(a.exps[i] + b.exps[i]);
    }
    return out;
}

std::string to_string(const VarContext& ctx, const Monomial& m) {
    if (m.nvars() != ctx.size())
        throw ContextMismatch("monomial length does not match context");
    std::string out;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.name(i);
        if (m.exps[i] > 1) {
            out += '^';
            out += std::to_string(m.exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

MonomialIdeal::MonomialIdeal(VarContext ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)) {
    if (gens.empty())
        throw InvalidIdeal("ideal needs at least one generator");
    for (const auto& g : gens) {
        if (g.nvars() != ctx_.size())
            throw ContextMismatch("generator length does not match context");
        unsigned d = g.degree();
        if (d == 0)
            throw InvalidIdeal("constant generator makes the ideal improper");
        if (d == 1)
            throw InvalidIdeal("degree-1 generator '" + to_string(ctx_, g) +
                               "' is rejected; eliminate the variable explicitly");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // keep only generators not strictly divisible by another
    for (const auto& g : gens) {
        bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Monomial& h) {
            return h != g && divides(h, g);
        });
        if (!redundant) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != ctx_.size())
        throw ContextMismatch("monomial length does not match ideal context");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_artinian() const {
    return exponent_bounds().has_value();
}

std::optional<std::vector<unsigned>> MonomialIdeal::exponent_bounds() const {
    std::vector<unsigned> bounds(ctx_.size(), 0);
    for (const auto& g : gens_) {
        auto v = g.pure_power_var();
        if (v) bounds[*v] = g.exps[*v];
    }
    if (std::any_of(bounds.begin(), bounds.end(), [](unsigned b) { return b == 0; }))
        return std::nullopt;
    return bounds;
}

MonomialIdeal minimalize(VarContext ctx, std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(ctx), std::move(gens));
}

MonomialIdeal reindex(const MonomialIdeal& ideal, const VarContext& target) {
    const auto& src = ideal.context();
    if (src.size() != target.size())
        throw ContextMismatch("reindex target has a different variable count");
    std::vector<std::size_t> to_target(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto j = target.index_of(src.name(i));
        if (!j)
            throw ContextMismatch("reindex target is missing variable " + src.name(i));
        to_target[i] = *j;
    }
    std::vector<Monomial> gens;
    gens.reserve(ideal.min_gens().size());
    for (const auto& g : ideal.min_gens()) {
        std::vector<unsigned> e(target.size(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) e[to_target[i]] = g.exps[i];
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(target, std::move(gens));
}

QuotientRing enumerate_survivors(const MonomialIdeal& ideal, std::size_t max_vertices) {
    auto bounds = ideal.exponent_bounds();
    if (!bounds)
        throw InvalidIdeal("ideal is not Artinian: some variable has no pure-power generator");

    std::size_t box = 1;
    for (unsigned b : *bounds) {
        if (box > std::numeric_limits<std::size_t>::max() / b ||
            box * b - 1 > max_vertices)
            throw CapExceeded("survivor box exceeds the vertex cap");
        box *= b;
    }

    std::vector<Monomial> survivors;
    Monomial cur(std::vector<unsigned>(bounds->size(), 0));
    // odometer over the exponent box, last coordinate fastest: lex order
    for (;;) {
        if (!cur.is_constant() && !ideal.contains(cur))
            survivors.push_back(cur);
        std::size_t i = cur.exps.size();
        while (i > 0) {
            --i;
            if (cur.exps[i] + 1 < (*bounds)[i]) {
                ++cur.exps[i];
                break;
            }
            cur.exps[i] = 0;
            if (i == 0) return QuotientRing{ideal, std::move(survivors), *bounds};
        }
    }
}

}  // namespace survival
