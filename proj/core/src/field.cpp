#include "vpa/field.hpp"

namespace vpa {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::bad_field: return "bad_field";
    case Errc::char_two_rejected: return "char_two_rejected";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::bad_scalar: return "bad_scalar";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::degenerate_form: return "degenerate_form";
    case Errc::zero_target: return "zero_target";
    case Errc::oracle_too_large: return "oracle_too_large";
    case Errc::empty_list: return "empty_list";
    case Errc::zero_mu: return "zero_mu";
    case Errc::zero_norm: return "zero_norm";
    case Errc::too_many_norms: return "too_many_norms";
    case Errc::not_an_algebra: return "not_an_algebra";
    case Errc::bad_dimension: return "bad_dimension";
    case Errc::norm_mismatch: return "norm_mismatch";
    case Errc::not_independent: return "not_independent";
    case Errc::not_a_base: return "not_a_base";
    case Errc::verification_failed: return "verification_failed";
    case Errc::not_composition: return "not_composition";
    case Errc::commutator_escape: return "commutator_escape";
    case Errc::schema_error: return "schema_error";
    case Errc::shape_error: return "shape_error";
    case Errc::io_error: return "io_error";
    }
    return "unknown";
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p == 2)
        throw Error(Errc::char_two_rejected, "prime fields of characteristic 2 are not supported");
    if (p < 3)
        throw Error(Errc::bad_field, "p must be an odd prime, got " + std::to_string(p));
    if (p % 2 == 0)
        throw Error(Errc::bad_field, std::to_string(p) + " is even, not an odd prime");
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            throw Error(Errc::bad_field, std::to_string(p) + " is not prime (divisible by " + std::to_string(d) + ")");
    return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::name() const {
    return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field()))
        throw Error(Errc::field_mismatch,
                    "operands live in " + a.field().name() + " and " + b.field().name());
}

} // namespace

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.p());
}

Scalar Scalar::from_int(const FieldSpec& f, long v) {
    if (f.is_rationals())
        return Scalar(f, mpq_class(v), 0);
    const std::uint64_t p = f.p();
    std::uint64_t r = v >= 0 ? static_cast<std::uint64_t>(v) % p
                             : p - (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
    return Scalar(f, mpq_class(0), r % p);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty())
        throw Error(Errc::bad_scalar, "empty scalar text");
    if (f.is_rationals()) {
        // mpq_class(str) accepts "a" and "a/b"; validate the shape ourselves
        // first since GMP is lenient about whitespace and bases.
        auto digits = [](const std::string& s, size_t from, size_t to) {
            if (from >= to) return false;
            for (size_t i = from; i < to; ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        size_t slash = text.find('/');
        size_t start = (text[0] == '-') ? 1 : 0;
        bool ok;
        if (slash == std::string::npos) {
            ok = digits(text, start, text.size());
        } else {
            ok = digits(text, start, slash) && digits(text, slash + 1, text.size());
        }
        if (!ok)
            throw Error(Errc::bad_scalar, "malformed rational \"" + text + "\"");
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw Error(Errc::bad_scalar, "malformed rational \"" + text + "\"");
        if (q.get_den() == 0)
            throw Error(Errc::bad_scalar, "zero denominator in \"" + text + "\"");
        q.canonicalize();
        return Scalar(f, std::move(q), 0);
    }
    // F_p: strictly a decimal residue in [0, p).
    std::uint64_t r = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw Error(Errc::bad_scalar, "malformed residue \"" + text + "\"");
        if (r > (UINT64_MAX - 9) / 10)
            throw Error(Errc::bad_scalar, "residue out of range \"" + text + "\"");
        r = r * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (r >= f.p())
        throw Error(Errc::bad_scalar,
                    "residue " + text + " not in [0, " + std::to_string(f.p()) + ")");
    return Scalar(f, mpq_class(0), r);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.p();
}

int Scalar::sign() const {
    if (!field_.is_rationals())
        throw Error(Errc::bad_field, "sign is defined under a real embedding, i.e. over Q only");
    return sgn(rat_);
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals())
        return Scalar(field_, mpq_class(-rat_), 0);
    return Scalar(field_, mpq_class(0), res_ == 0 ? 0 : field_.p() - res_);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(Errc::division_by_zero, "inverse of zero");
    if (field_.is_rationals())
        return Scalar(field_, mpq_class(1) / rat_, 0);
    return Scalar(field_, mpq_class(0), powmod(res_, field_.p() - 2, field_.p()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.is_rationals())
        return Scalar(a.field_, mpq_class(a.rat_ + b.rat_), 0);
    const std::uint64_t p = a.field_.p();
    std::uint64_t r = a.res_ + b.res_;
    return Scalar(a.field_, mpq_class(0), r >= p ? r - p : r);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.is_rationals())
        return Scalar(a.field_, mpq_class(a.rat_ - b.rat_), 0);
    const std::uint64_t p = a.field_.p();
    return Scalar(a.field_, mpq_class(0), a.res_ >= b.res_ ? a.res_ - b.res_ : a.res_ + p - b.res_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.is_rationals())
        return Scalar(a.field_, mpq_class(a.rat_ * b.rat_), 0);
    return Scalar(a.field_, mpq_class(0), mulmod(a.res_, b.res_, a.field_.p()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero())
        throw Error(Errc::division_by_zero, "division by zero");
    if (a.field_.is_rationals())
        return Scalar(a.field_, mpq_class(a.rat_ / b.rat_), 0);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::str() const {
    return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

std::optional<Scalar> is_square(const Scalar& a) {
    const FieldSpec& f = a.field();
    if (f.is_rationals()) {
        const mpq_class& q = a.rat();
        if (sgn(q) < 0) return std::nullopt;
        mpz_class num = q.get_num(), den = q.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        mpq_class r(rn, rd); // already canonical: gcd(num,den)=1 implies gcd of roots is 1
        return Scalar::parse(f, r.get_str());
    }

    const std::uint64_t p = f.p();
    const std::uint64_t n = a.residue();
    if (n == 0) return Scalar::zero(f);
    if (powmod(n, (p - 1) / 2, p) != 1) return std::nullopt; // Euler criterion

    std::uint64_t r;
    if (p % 4 == 3) {
        r = powmod(n, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. p-1 = q * 2^s with q odd.
        std::uint64_t q = p - 1, s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        std::uint64_t z = 2;
        while (powmod(z, (p - 1) / 2, p) == 1) ++z; // first quadratic non-residue
        std::uint64_t m = s;
        std::uint64_t c = powmod(z, q, p);
        std::uint64_t t = powmod(n, q, p);
        r = powmod(n, (q + 1) / 2, p);
        while (t != 1) {
            std::uint64_t i = 0, tt = t;
            while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    if (p - r < r) r = p - r; // canonical: the smaller of the two roots
    return Scalar::parse(f, std::to_string(r));
}

Scalar one_half(const FieldSpec& f) {
    if (f.is_rationals())
        return Scalar::parse(f, "1/2");
    return Scalar::parse(f, std::to_string((f.p() + 1) / 2));
}

} // namespace vpa
