#include "logarr/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "logarr/errors.hpp"

namespace logarr {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

/* dense univariate helpers over Q, constant term first */

void strip(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rat> mul_dense(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/* quotient of a by b, remainder must come out zero when exact is required */
std::vector<Rat> divmod_dense(std::vector<Rat> a, const std::vector<Rat>& b, std::vector<Rat>* rem) {
    strip(a);
    std::vector<Rat> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        Rat c = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        strip(a);
    }
    if (rem) *rem = a;
    return q;
}

} // namespace

const std::vector<Rat>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Rat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    /* Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d */
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto dit = cache.find(d);
        if (dit == cache.end()) {
            /* fill recursively without re-locking */
            std::vector<Rat> dn(d + 1, Rat(0));
            dn[0] = Rat(-1);
            dn[d] = Rat(1);
            for (unsigned e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                dn = divmod_dense(dn, cache.at(e), nullptr);
            }
            dit = cache.emplace(d, std::move(dn)).first;
        }
        num = divmod_dense(num, dit->second, nullptr);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

CycNum CycNum::reduced(unsigned n, std::vector<Rat> dense) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t d = dense.size(); d-- > deg;) {
        Rat c = dense[d];
        if (c == 0) continue;
        dense[d] = Rat(0);
        for (std::size_t i = 0; i < deg; ++i) dense[d - deg + i] -= c * phi_poly[i];
    }
    dense.resize(deg, Rat(0));
    CycNum out;
    out.order_ = n;
    out.c_ = std::move(dense);
    return out;
}

CycNum CycNum::root_of_unity(unsigned n, long k) {
    if (n == 0) throw math_error("root_of_unity: order must be positive");
    long km = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    unsigned g = std::gcd(static_cast<unsigned>(km), n);
    n /= g;
    km /= g;
    std::vector<Rat> dense(static_cast<std::size_t>(km) + 1, Rat(0));
    dense[static_cast<std::size_t>(km)] = Rat(1);
    return reduced(n, std::move(dense));
}

CycNum CycNum::from_coeffs(unsigned n, std::vector<Rat> coeffs) {
    if (coeffs.size() != euler_phi(n))
        throw usage_error("CycNum::from_coeffs: expected " + std::to_string(euler_phi(n)) + " coefficients");
    CycNum out;
    out.order_ = n;
    out.c_ = std::move(coeffs);
    return out;
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycNum::to_rational() const {
    if (!is_rational()) throw math_error("CycNum::to_rational: value not rational: " + str());
    return c_[0];
}

CycNum CycNum::lifted(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw math_error("CycNum::lifted: order does not divide target");
    unsigned step = m / order_;
    std::vector<Rat> dense((c_.size() - 1) * step + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) dense[i * step] = c_[i];
    return reduced(m, std::move(dense));
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

CycNum CycNum::operator+(const CycNum& o) const {
    unsigned m = std::lcm(order_, o.order_);
    CycNum a = lifted(m), b = o.lifted(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const {
    unsigned m = std::lcm(order_, o.order_);
    CycNum a = lifted(m), b = o.lifted(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

CycNum CycNum::operator*(const CycNum& o) const {
    unsigned m = std::lcm(order_, o.order_);
    CycNum a = lifted(m), b = o.lifted(m);
    std::vector<Rat> dense(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) dense[i + j] += a.c_[i] * b.c_[j];
    }
    return reduced(m, std::move(dense));
}

CycNum CycNum::inv() const {
    if (is_zero()) throw division_by_zero();
    if (is_rational()) return CycNum(Rat(1) / c_[0]);
    /* extended Euclid: u * this + v * Phi_N = 1 over Q[x]; Phi_N irreducible */
    std::vector<Rat> r0 = cyclotomic_polynomial(order_);
    std::vector<Rat> r1 = c_;
    strip(r1);
    std::vector<Rat> s0, s1 = {Rat(1)}; // coefficients of `this` along the way
    while (true) {
        std::vector<Rat> rem;
        std::vector<Rat> q = divmod_dense(r0, r1, &rem);
        strip(rem);
        if (rem.empty()) break;
        std::vector<Rat> s_next = s0.empty() ? std::vector<Rat>{} : s0;
        std::vector<Rat> qs = mul_dense(q, s1);
        if (s_next.size() < qs.size()) s_next.resize(qs.size(), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s_next[i] -= qs[i];
        s0 = std::move(s1);
        s1 = std::move(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    /* r1 is a nonzero constant gcd; inverse = s1 / r1 */
    Rat g = r1[0];
    for (auto& x : s1) x /= g;
    return reduced(order_, std::move(s1));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inv(); }

CycNum CycNum::conj() const {
    if (order_ <= 2) return *this;
    std::vector<Rat> dense(order_, Rat(0));
    dense[0] = c_[0];
    for (std::size_t i = 1; i < c_.size(); ++i) dense[order_ - i] = c_[i];
    return reduced(order_, std::move(dense));
}

bool CycNum::operator==(const CycNum& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    unsigned m = std::lcm(order_, o.order_);
    return lifted(m).c_ == o.lifted(m).c_;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
    unsigned m = std::lcm(a.order_, b.order_);
    CycNum x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::complex<double> CycNum::to_complex() const {
    const double tau = 6.283185307179586476925287;
    std::complex<double> z = std::polar(1.0, tau / static_cast<double>(order_));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + std::complex<double>(c_[i].get_d(), 0.0);
    return acc;
}

std::string CycNum::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1 && i != 0);
        if (!unit) os << rat_str(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string CycNum::key() const {
    std::ostringstream os;
    os << order_;
    for (const auto& x : c_) os << "|" << rat_str(x);
    return os.str();
}

} // namespace logarr
