#include "kpm/scalar.hpp"

#include <sstream>

namespace kpm {

namespace {

// -- polynomial helpers on coefficient vectors over a base field ------------
// Vectors are coefficient lists c[0] + c[1]x + ..., trailing zeros trimmed.

using Vec = std::vector<Scalar>;

void trim(Vec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Vec vadd(const Vec& a, const Vec& b) {
    Vec out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    trim(out);
    return out;
}

Vec vneg(Vec a) {
    for (auto& c : a) c = -c;
    return a;
}

Vec vsub(const Vec& a, const Vec& b) { return vadd(a, vneg(b)); }

Vec vmul(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Vec vscale(const Vec& a, const Scalar& c) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    trim(out);
    return out;
}

// Reduces v modulo the monic polynomial x^n + tail.
Vec vreduce(Vec v, const Vec& tail) {
    const std::size_t n = tail.size();
    while (v.size() > n) {
        Scalar lead = v.back();
        v.pop_back();
        if (lead.is_zero()) continue;
        const std::size_t shift = v.size() - n;
        for (std::size_t i = 0; i < n; ++i) v[shift + i] -= lead * tail[i];
    }
    trim(v);
    return v;
}

// Division with remainder by a poly with invertible leading coefficient.
void vdivmod(const Vec& a, const Vec& b, Vec& q, Vec& r) {
    q.clear();
    r = a;
    const Scalar lead_inv = b.back().inverse();
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Scalar(0));
    while (r.size() >= b.size() && !r.empty()) {
        Scalar c = r.back() * lead_inv;
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

Vec vmonic(const Vec& a) {
    if (a.empty()) return a;
    return vscale(a, a.back().inverse());
}

}  // namespace

ZeroDivisorSplit::ZeroDivisorSplit(FieldPtr f, std::vector<Scalar> g)
    : std::runtime_error("zero divisor in tower extension " + (f ? f->var() : std::string("?"))),
      field(std::move(f)),
      factor(std::move(g)) {}

FieldPtr Field::make(FieldPtr base, std::vector<Scalar> monic_tail, std::string var) {
    if (monic_tail.empty()) throw MalformedInput("extension of degree 0");
    auto f = std::shared_ptr<Field>(new Field());
    f->base_ = std::move(base);
    f->tail_ = std::move(monic_tail);
    f->var_ = std::move(var);
    f->height_ = f->base_ ? f->base_->tower_height() + 1 : 1;
    return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a.get() == b.get(); }

Scalar Scalar::generator(const FieldPtr& f) {
    if (!f) throw MalformedInput("generator of the rationals");
    if (f->degree() == 1) {
        // x = -c0 already in the base.
        return (-f->modulus_tail()[0]).promote(f);
    }
    Scalar s;
    s.field_ = f;
    s.co_ = {Scalar(0), Scalar(1)};
    return s;
}

Scalar Scalar::with_coeffs(const FieldPtr& f, std::vector<Scalar> coeffs) {
    if (!f) throw MalformedInput("with_coeffs without a field");
    Scalar s;
    s.field_ = f;
    s.co_ = vreduce(std::move(coeffs), f->modulus_tail());
    return s;
}

const Rat& Scalar::rat() const {
    if (field_) throw MalformedInput("scalar is not rational");
    return rat_;
}

bool Scalar::is_zero() const {
    if (!field_) return sgn(rat_) == 0;
    return co_.empty();
}

// True if `inner` occurs in the base chain of `outer`.
static bool in_base_chain(const FieldPtr& outer, const FieldPtr& inner) {
    FieldPtr f = outer;
    while (f) {
        if (same_field(f, inner)) return true;
        f = f->base();
    }
    return false;
}

Scalar Scalar::promote(const FieldPtr& f) const {
    if (same_field(field_, f)) return *this;
    if (!f) throw MalformedInput("cannot demote a field element to the rationals");
    if (field_ && !in_base_chain(f->base(), field_))
        throw MalformedInput("mixed scalar rings");
    // Express in f->base() first, then wrap as a constant.
    Scalar base_elem = same_field(field_, f->base()) ? *this : promote(f->base());
    Scalar s;
    s.field_ = f;
    if (!base_elem.is_zero()) s.co_ = {base_elem};
    return s;
}

// Unifies the fields of a and b; returns the common field (may be null).
static FieldPtr unify(Scalar& a, Scalar& b) {
    if (same_field(a.field(), b.field())) return a.field();
    const int ha = a.field() ? a.field()->tower_height() : 0;
    const int hb = b.field() ? b.field()->tower_height() : 0;
    if (ha <= hb) {
        a = a.promote(b.field());
        return b.field();
    }
    b = b.promote(a.field());
    return a.field();
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (!field_) {
        s.rat_ = -rat_;
    } else {
        s.co_ = vneg(co_);
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    FieldPtr f = unify(x, y);
    if (!f) return Scalar(x.rat_ + y.rat_);
    Scalar s;
    s.field_ = f;
    s.co_ = vadd(x.co_, y.co_);
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    FieldPtr f = unify(x, y);
    if (!f) return Scalar(x.rat_ * y.rat_);
    Scalar s;
    s.field_ = f;
    s.co_ = vreduce(vmul(x.co_, y.co_), f->modulus_tail());
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

Scalar Scalar::inverse() const {
    if (!field_) {
        if (sgn(rat_) == 0) throw SingularInput("division by zero");
        Scalar s;
        s.rat_ = 1 / rat_;
        return s;
    }
    if (co_.empty()) throw SingularInput("division by zero");
    // Extended Euclid: u * this + v * modulus = gcd.
    Vec modulus = field_->modulus_tail();
    modulus.push_back(Scalar(1));
    Vec r0 = modulus, r1 = co_;
    Vec u0 = {}, u1 = {Scalar(1)};  // cofactors of `this`
    while (!r1.empty()) {
        Vec q, r;
        vdivmod(r0, r1, q, r);
        Vec u2 = vsub(u0, vmul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd(this, modulus), u0 * this ≡ r0 (mod modulus).
    if (r0.size() == 1) {
        Scalar s;
        s.field_ = field_;
        s.co_ = vreduce(vscale(u0, r0[0].inverse()), field_->modulus_tail());
        return s;
    }
    if (r0.size() == modulus.size()) throw SingularInput("division by zero");
    throw ZeroDivisorSplit(field_, vmonic(r0));
}

Scalar Scalar::reduce_into(const FieldPtr& to) const {
    if (!field_) return promote(to);
    if (!to || !same_field(to->base(), field_->base()))
        throw MalformedInput("reduce_into: base mismatch");
    return Scalar::with_coeffs(to, co_);
}

std::size_t Scalar::height() const {
    if (!field_) return rat_height(rat_);
    std::size_t h = 1;
    for (const auto& c : co_) h += c.height();
    return h;
}

std::string Scalar::str() const {
    if (!field_) return rat_str(rat_);
    if (co_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < co_.size(); ++i) {
        if (co_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << co_[i].str();
        if (i >= 1) os << "*" << field_->var();
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace kpm
