#include "lrw/enveloping.hpp"

#include <algorithm>

namespace lrw {

UElement UElement::monomial(Context ctx, GenMonomial m, const Rational& c) {
    UElement u(ctx);
    u.add_term(m, LaurentPoly::constant(u.ctx_, c));
    return u;
}

UElement UElement::one(Context ctx, int l) {
    return monomial(std::move(ctx), GenMonomial{std::vector<int>(l, 0), 0});
}

void UElement::add_term(const GenMonomial& m, const LaurentPoly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly UElement::coefficient(const GenMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly(ctx_) : it->second;
}

UElement UElement::operator-() const {
    UElement r(ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

UElement& UElement::operator+=(const UElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    if (!ctx_)
        ctx_ = o.ctx_;
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    if (!ctx_)
        ctx_ = o.ctx_;
    return *this;
}

UElement UElement::left_scaled(const LaurentPoly& a) const {
    UElement r(ctx_);
    if (a.is_zero())
        return r;
    for (const auto& [m, c] : terms_)
        r.add_term(m, a * c);
    return r;
}

int UElement::top_degree() const {
    int top = -1;
    for (const auto& [m, c] : terms_)
        top = std::max(top, m.degree());
    return top;
}

RewriteSystem::RewriteSystem(Presentation pres, Cochain twist, EnvelopingMode mode)
    : pres_(std::move(pres)), f_(std::move(twist)), mode_(mode) {
    if (f_.degree() != 2)
        throw InputError("RewriteSystem: twist must be a 2-cochain");
    twist_is_cocycle_ = is_cocycle(f_);
}

LaurentPoly RewriteSystem::twist_value(int i, int j) const {
    if (i == j)
        return LaurentPoly(pres_->context());
    if (i < j)
        return f_.value({i, j});
    return -f_.value({j, i});
}

UElement RewriteSystem::gen_times_monomial(int i, const GenMonomial& m) const {
    const int l = pres_->rank();
    int lowest = -1;
    for (int k = 0; k < l; ++k)
        if (m.p[k] > 0) {
            lowest = k;
            break;
        }
    if (lowest < 0 || i <= lowest) {
        GenMonomial out = m;
        out.p[i] += 1;
        return UElement::monomial(pres_->context(), out);
    }

    // e_i e_j e^{Q'} with j = lowest < i:
    //   e_j (e_i e^{Q'}) + [e_i,e_j] e^{Q'} + f(e_i,e_j) z e^{Q'}
    GenMonomial rest = m;
    rest.p[lowest] -= 1;
    UElement inner = gen_times_monomial(i, rest);
    UElement out = gen_times(lowest, inner);

    LElement br = pres_->bracket_basis(i, lowest);
    for (int k = 0; k < l; ++k) {
        if (br[k].is_zero())
            continue;
        out += gen_times_monomial(k, rest).left_scaled(br[k]);
    }

    LaurentPoly fv = twist_value(i, lowest);
    if (!fv.is_zero()) {
        GenMonomial ft = rest;
        if (mode_ == EnvelopingMode::Central)
            ft.z_exp += 1;
        UElement fterm(pres_->context());
        fterm.add_term(ft, fv);
        out += fterm;
    }
    return out;
}

UElement RewriteSystem::gen_times(int i, const UElement& u) const {
    if (i < 0 || i >= pres_->rank())
        throw InputError("gen_times: generator index out of range");
    UElement out(pres_->context());
    for (const auto& [m, a] : u.terms()) {
        out += gen_times_monomial(i, m).left_scaled(a);
        LaurentPoly da = pres_->anchor_basis_apply(i, a);
        if (!da.is_zero())
            out.add_term(m, da);
    }
    return out;
}

UElement RewriteSystem::normal_form(const Word& word) const {
    UElement u = one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
        case WordToken::Kind::Coef:
            u = u.left_scaled(it->coef);
            break;
        case WordToken::Kind::Gen:
            u = gen_times(it->gen, u);
            break;
        case WordToken::Kind::Z: {
            if (mode_ != EnvelopingMode::Central)
                throw InputError("normal_form: z token outside central mode");
            UElement shifted(pres_->context());
            for (const auto& [m, c] : u.terms()) {
                GenMonomial zm = m;
                zm.z_exp += 1;
                shifted.add_term(zm, c);
            }
            u = shifted;
            break;
        }
        }
    }
    return u;
}

UElement RewriteSystem::mul(const UElement& u, const UElement& v) const {
    UElement out(pres_->context());
    const int l = pres_->rank();
    for (const auto& [m, a] : u.terms()) {
        UElement w = v;
        for (int i = l - 1; i >= 0; --i)
            for (int rep = 0; rep < m.p[i]; ++rep)
                w = gen_times(i, w);
        if (m.z_exp != 0) {
            UElement shifted(pres_->context());
            for (const auto& [mm, c] : w.terms()) {
                GenMonomial zm = mm;
                zm.z_exp += m.z_exp;
                shifted.add_term(zm, c);
            }
            w = shifted;
        }
        out += w.left_scaled(a);
    }
    return out;
}

UElement RewriteSystem::degree_window(const UElement& u, int lo, int hi) {
    if (lo < 0 || hi <= lo)
        throw InputError("degree_window: need 0 <= lo < hi");
    UElement out(u.context());
    for (const auto& [m, c] : u.terms()) {
        int d = m.degree();
        if (lo <= d && d < hi)
            out.add_term(m, c);
    }
    return out;
}

ConfluenceReport RewriteSystem::diamond_check() const {
    ConfluenceReport report;
    const int l = pres_->rank();
    const Context& ctx = pres_->context();

    // one-step reduction of the pair e_a e_b (a > b) followed by `suffix`
    auto swap_step = [&](int a, int b, const Word& prefix, const Word& suffix) {
        Word w = prefix;
        w.push_back(WordToken::generator(b));
        w.push_back(WordToken::generator(a));
        w.insert(w.end(), suffix.begin(), suffix.end());
        UElement out = normal_form(w);

        LElement br = pres_->bracket_basis(a, b);
        for (int k = 0; k < l; ++k) {
            if (br[k].is_zero())
                continue;
            Word wk = prefix;
            wk.push_back(WordToken::coefficient(br[k]));
            wk.push_back(WordToken::generator(k));
            wk.insert(wk.end(), suffix.begin(), suffix.end());
            out += normal_form(wk);
        }
        LaurentPoly fv = twist_value(a, b);
        if (!fv.is_zero()) {
            Word wf = prefix;
            wf.push_back(WordToken::coefficient(fv));
            if (mode_ == EnvelopingMode::Central)
                wf.push_back(WordToken::z());
            wf.insert(wf.end(), suffix.begin(), suffix.end());
            out += normal_form(wf);
        }
        return out;
    };

    // e_k e_j e_i with k > j > i: reduce (e_k e_j) first vs (e_j e_i) first
    for (int k = 2; k < l; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                UElement left = swap_step(k, j, {}, {WordToken::generator(i)});
                UElement right = swap_step(j, i, {WordToken::generator(k)}, {});
                OverlapResult r;
                r.kind = "triple";
                r.generators = {k + 1, j + 1, i + 1};
                r.discrepancy = left - right;
                r.resolved = r.discrepancy.is_zero();
                if (!r.resolved)
                    report.resolvable = false;
                report.overlaps.push_back(std::move(r));
            }

    // e_j e_i a with j > i, a over ring generators and their inverses:
    // swap first vs move the coefficient first
    std::vector<std::pair<std::string, LaurentPoly>> letters;
    for (int v = 0; v < ctx->num_vars(); ++v) {
        letters.emplace_back(ctx->var(v).name, LaurentPoly::variable(ctx, v));
        if (ctx->var(v).invertible)
            letters.emplace_back(ctx->var(v).name + "^-1", LaurentPoly::variable(ctx, v, -1));
    }
    for (int j = 1; j < l; ++j)
        for (int i = 0; i < j; ++i)
            for (const auto& [name, a] : letters) {
                UElement left = swap_step(j, i, {}, {WordToken::coefficient(a)});
                UElement right = normal_form({WordToken::generator(j), WordToken::coefficient(a),
                                              WordToken::generator(i)});
                right += normal_form(
                    {WordToken::generator(j), WordToken::coefficient(pres_->anchor_basis_apply(i, a))});
                OverlapResult r;
                r.kind = "coefficient";
                r.generators = {j + 1, i + 1};
                r.coefficient = name;
                r.discrepancy = left - right;
                r.resolved = r.discrepancy.is_zero();
                if (!r.resolved)
                    report.resolvable = false;
                report.overlaps.push_back(std::move(r));
            }

    return report;
}

}  // namespace lrw
