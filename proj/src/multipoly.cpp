#include "cnx/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cnx {

MultiPoly::MultiPoly(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
    Cyclotomic check(order);  // validates the order range
    (void)check;
}

MultiPoly MultiPoly::constant(int nvars, int order, const Rational& c) {
    return constant(nvars, Cyclotomic(order, c));
}

MultiPoly MultiPoly::constant(int nvars, const Cyclotomic& c) {
    MultiPoly p(nvars, c.order());
    p.insert(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int order, int index) {
    if (index < 0 || index >= nvars)
        throw std::out_of_range("MultiPoly::variable: index out of range");
    ExpVec e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, e, Cyclotomic(order, Rational(1)));
}

MultiPoly MultiPoly::monomial(int nvars, const ExpVec& exps, const Cyclotomic& coeff) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("MultiPoly::monomial: exponent arity mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
    MultiPoly p(nvars, coeff.order());
    p.insert(exps, coeff);
    return p;
}

Cyclotomic MultiPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Cyclotomic(order_) : it->second;
}

void MultiPoly::insert(const ExpVec& exps, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(exps, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable-count mismatch");
    if (order_ != o.order_) throw std::invalid_argument("MultiPoly: coefficient-order mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, a.order_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Cyclotomic& c) {
    if (c.order() != order_) throw std::invalid_argument("MultiPoly: coefficient-order mismatch");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    // Multiplying by a nonzero field element cannot create zero terms.
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::partial_derivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw std::out_of_range("MultiPoly::partial_derivative: index out of range");
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.insert(d, c * Rational(e[var]));
    }
    return r;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg == -1) deg = d;
        else if (d != deg) return false;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

bool MultiPoly::has_rational_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

double MultiPoly::eval_double(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval_double: arity mismatch");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.rational_value().to_double();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

std::complex<double> MultiPoly::eval_complex(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval_complex: arity mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

Rational MultiPoly::eval_rational(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval_rational: arity mismatch");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c.rational_value();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

Cyclotomic MultiPoly::eval_cyclotomic(const std::vector<Cyclotomic>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval_cyclotomic: arity mismatch");
    Cyclotomic acc(order_);
    for (const auto& [e, c] : terms_) {
        Cyclotomic t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

std::map<ExpVec, Rational> MultiPoly::rational_terms() const {
    std::map<ExpVec, Rational> out;
    for (const auto& [e, c] : terms_) out.emplace(e, c.rational_value());
    return out;
}

namespace {

// Graded-lex display order: higher total degree first, then lexicographically
// larger exponent vector first.
bool display_before(const ExpVec& a, const ExpVec& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Cyclotomic>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return display_before(a->first, b->first); });

    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const ExpVec& e = t->first;
        const Cyclotomic& c = t->second;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });

        std::string coeff_text;
        bool negate = false;
        if (c.is_rational()) {
            Rational r = c.rational_value();
            negate = r.sign() < 0;
            Rational a = abs(r);
            if (!a.is_one() || constant_term) coeff_text = a.str();
        } else {
            coeff_text = "(" + c.str() + ")";
        }

        if (first) {
            if (negate) os << "-";
            first = false;
        } else {
            os << (negate ? " - " : " + ");
        }

        bool wrote = false;
        if (!coeff_text.empty()) {
            os << coeff_text;
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser for the polynomial grammar.
class Parser {
public:
    Parser(std::string_view text, int nvars, int order)
        : text_(text), nvars_(nvars), order_(order) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("MultiPoly::parse: " + what + " at position " +
                                    std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expression() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = power();
        while (eat('*')) acc *= power();
        return acc;
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (!eat('^')) return base;
        long long k = integer();
        if (k < 0) fail("negative exponent");
        MultiPoly acc = MultiPoly::constant(nvars_, order_, Rational(1));
        for (long long i = 0; i < k; ++i) acc *= base;
        return acc;
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            MultiPoly inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            long long idx = integer();
            if (idx < 0 || idx >= nvars_) fail("variable index out of range");
            return MultiPoly::variable(nvars_, order_, static_cast<int>(idx));
        }
        if (c == 'j') {
            ++pos_;
            return MultiPoly::constant(nvars_, zeta(order_, 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long num = integer();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                long long den = integer();
                return MultiPoly::constant(nvars_, order_, Rational(BigInt(num), BigInt(den)));
            }
            return MultiPoly::constant(nvars_, order_, Rational(num));
        }
        fail("expected atom");
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    int nvars_;
    int order_;
    size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, int nvars, int order) {
    return Parser(text, nvars, order).parse();
}

}  // namespace cnx
