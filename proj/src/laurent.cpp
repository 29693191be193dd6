#include "lrw/laurent.hpp"

#include <cctype>
#include <sstream>

namespace lrw {

bool RingContext::same_as(const RingContext& o) const {
    if (this == &o)
        return true;
    if (vars_.size() != o.vars_.size())
        return false;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].invertible != o.vars_[i].invertible)
            return false;
    return true;
}

std::optional<int> RingContext::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

LaurentPoly::LaurentPoly(Context ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (!c.is_zero())
        terms_.emplace(Exponents(ctx_->num_vars(), 0), c);
}

LaurentPoly::LaurentPoly(Context ctx, const Exponents& e, const Rational& c) : ctx_(std::move(ctx)) {
    check_exponents(e);
    if (!c.is_zero())
        terms_.emplace(e, c);
}

LaurentPoly LaurentPoly::variable(Context ctx, int i, int exp) {
    Exponents e(ctx->num_vars(), 0);
    e.at(i) = exp;
    return LaurentPoly(std::move(ctx), e, Rational(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    for (int v : terms_.begin()->first)
        if (v != 0)
            return false;
    return true;
}

Rational LaurentPoly::constant_term() const {
    Exponents zero(ctx_ ? ctx_->num_vars() : 0, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::check_exponents(const Exponents& e) const {
    if (static_cast<int>(e.size()) != ctx_->num_vars())
        throw InputError("LaurentPoly: exponent vector length mismatch");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ctx_->var(static_cast<int>(i)).invertible)
            throw InputError("LaurentPoly: negative exponent on non-invertible variable " +
                             ctx_->var(static_cast<int>(i)).name);
}

void LaurentPoly::require_same_context(const LaurentPoly& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same_as(*o.ctx_))
        throw InputError("LaurentPoly: ring context mismatch");
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    check_exponents(e);
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_context(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_context(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_context(b);
    LaurentPoly r(a.ctx_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea);
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(ctx_);
    if (c.is_zero())
        return r;
    for (const auto& [e, t] : terms_)
        r.terms_.emplace(e, t * c);
    return r;
}

LaurentPoly LaurentPoly::partial(int i) const {
    if (i < 0 || i >= ctx_->num_vars())
        throw InputError("partial: variable index out of range");
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            continue;
        Exponents d(e);
        d[i] -= 1;
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

std::map<Exponents, LaurentPoly> LaurentPoly::grade_split() const {
    std::map<Exponents, LaurentPoly> parts;
    for (const auto& [e, c] : terms_)
        parts.emplace(e, LaurentPoly(ctx_, e, c));
    return parts;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1)
        return false;
    const Exponents& e = terms_.begin()->first;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !ctx_->var(static_cast<int>(i)).invertible)
            return false;
    return true;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit())
        throw PreconditionError("unit_inverse: not a unit");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e);
    for (int& v : inv)
        v = -v;
    return LaurentPoly(ctx_, inv, c.inverse());
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        first = false;
        bool has_vars = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (has_vars)
                mono << "*";
            mono << ctx_->var(static_cast<int>(i)).name;
            if (e[i] != 1)
                mono << "^" << e[i];
            has_vars = true;
        }
        if (!has_vars) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono.str();
        } else {
            os << a.str() << "*" << mono.str();
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    Context ctx;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw InputError("poly parse error at position " + std::to_string(pos) + ": " + why +
                         " in '" + s + "'");
    }

    std::string read_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return s.substr(start, pos - start);
    }

    Rational read_rational() {
        std::string num = read_integer();
        if (eat('/'))
            return Rational::parse(num + "/" + read_integer());
        return Rational::parse(num);
    }

    std::string read_name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start)
            fail("expected variable name");
        return s.substr(start, pos - start);
    }

    // term := [rational] ('*' var)* | var ('*' var)* ; var := name ['^' int]
    LaurentPoly read_term(int sign) {
        Rational coef(sign);
        Exponents e(ctx->num_vars(), 0);
        skip_ws();
        bool any = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            coef *= read_rational();
            any = true;
        }
        while (true) {
            skip_ws();
            if (any) {
                size_t save = pos;
                if (!eat('*')) {
                    break;
                }
                skip_ws();
                if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                    pos = save;
                    break;
                }
            } else if (pos >= s.size() ||
                       !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                break;
            }
            std::string name = read_name();
            auto idx = ctx->var_index(name);
            if (!idx)
                fail("unknown variable '" + name + "'");
            int exp = 1;
            if (eat('^'))
                exp = std::stoi(read_integer());
            e[*idx] += exp;
            any = true;
        }
        if (!any)
            fail("empty term");
        return LaurentPoly(ctx, e, coef);
    }

    LaurentPoly parse() {
        LaurentPoly acc(ctx);
        skip_ws();
        if (pos >= s.size())
            fail("empty polynomial");
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        acc += read_term(sign);
        while (true) {
            skip_ws();
            if (pos >= s.size())
                break;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                fail("expected '+' or '-'");
            acc += read_term(sign);
        }
        return acc;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(Context ctx, const std::string& text) {
    PolyParser p{std::move(ctx), text};
    return p.parse();
}

}  // namespace lrw
