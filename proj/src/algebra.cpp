#include "cohomlab/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cohomlab {

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::domain_error("parity must be 'even' or 'odd'");
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

CanonicalGen canonical_generator(int i, int j, int n, Parity parity) {
    if (n < 1 || n > kMaxPoints) throw std::domain_error("point count out of range");
    if (i < 1 || i > n || j < 1 || j > n) throw std::domain_error("generator index out of range");
    if (i == j) return {true, 0, 0, 1};
    if (i < j) return {false, i, j, 1};
    return {false, j, i, parity == Parity::odd ? -1 : 1};
}

void Monomial::push_factor(int i, int j) {
    f_[len_++] = static_cast<std::uint8_t>((i << 4) | j);
}

bool Monomial::is_admissible_for(int n) const {
    int prev_top = 1;
    for (int h = 0; h < len_; ++h) {
        if (bottom(h) < 1 || bottom(h) >= top(h) || top(h) > n) return false;
        if (top(h) <= prev_top) return false;
        prev_top = top(h);
    }
    return true;
}

std::vector<std::pair<int, int>> Monomial::factors() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(len_);
    for (int h = 0; h < len_; ++h) out.emplace_back(bottom(h), top(h));
    return out;
}

std::string Monomial::text() const {
    if (len_ == 0) return "1";
    std::ostringstream os;
    for (int h = 0; h < len_; ++h) os << "A[" << bottom(h) << ',' << top(h) << ']';
    return os.str();
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = len_ <=> o.len_; c != 0) return c;
    for (int h = 0; h < len_; ++h) {
        if (auto c = top(h) <=> o.top(h); c != 0) return c;
        if (auto c = bottom(h) <=> o.bottom(h); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

void accumulate(std::map<Monomial, Integer>& acc, const Monomial& m, const Integer& c) {
    auto [it, inserted] = acc.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    } else if (it->second == 0) {
        acc.erase(it);
    }
}

// Straighten m * A_{a,c} (a < c, both canonical) onto the admissible basis,
// adding coeff-scaled terms into acc. When the incoming top collides with an
// existing factor A_{p,c}, the pair rewrites through
//   A_{p,c} A_{a,c} = A_{p,a} A_{a,c} - A_{p,a} A_{p,c}   (p < a)
// which is the Arnold-type relation put in canonical factors; the freshly
// created generator recurses into the prefix of smaller tops, so the
// descending multiset of tops strictly decreases and the recursion ends.
void mono_times_gen(const Monomial& m, int a, int c, Parity parity, const Integer& coeff,
                    std::map<Monomial, Integer>& acc) {
    const int k = m.degree();
    int t = 0;
    while (t < k && m.top(t) < c) ++t;

    if (t == k || m.top(t) != c) {
        Monomial out;
        for (int h = 0; h < t; ++h) out.push_factor(m.bottom(h), m.top(h));
        out.push_factor(a, c);
        for (int h = t; h < k; ++h) out.push_factor(m.bottom(h), m.top(h));
        const bool neg = parity == Parity::even && ((k - t) & 1);
        accumulate(acc, out, neg ? -coeff : coeff);
        return;
    }

    const int p = m.bottom(t);
    if (p == a) return;  // repeated factor vanishes in both parities

    Integer base = coeff;
    if (parity == Parity::even && ((k - 1 - t) & 1)) base = -base;

    int x1, x2, y_plus, y_minus;
    if (p < a) {
        x1 = p; x2 = a; y_plus = a; y_minus = p;
    } else {
        x1 = a; x2 = p; y_plus = p; y_minus = a;
        if (parity == Parity::even) base = -base;  // swap the adjacent pair first
    }

    Monomial prefix;
    for (int h = 0; h < t; ++h) prefix.push_factor(m.bottom(h), m.top(h));
    std::map<Monomial, Integer> sub;
    mono_times_gen(prefix, x1, x2, parity, Integer(1), sub);

    for (const auto& [pre, cpre] : sub) {
        for (int which = 0; which < 2; ++which) {
            Monomial out = pre;
            out.push_factor(which == 0 ? y_plus : y_minus, c);
            for (int h = t + 1; h < k; ++h) out.push_factor(m.bottom(h), m.top(h));
            Integer cv = base * cpre;
            accumulate(acc, out, which == 0 ? cv : -cv);
        }
    }
}

}  // namespace

AlgebraElement AlgebraElement::unit(int n, Parity parity) {
    AlgebraElement e(n, parity);
    e.add_term(Monomial{}, 1);
    return e;
}

AlgebraElement AlgebraElement::generator(int n, Parity parity, int i, int j) {
    AlgebraElement e(n, parity);
    CanonicalGen g = canonical_generator(i, j, n, parity);
    if (!g.zero) {
        Monomial m;
        m.push_factor(g.i, g.j);
        e.add_term(m, g.sign);
    }
    return e;
}

bool AlgebraElement::is_homogeneous(int* degree_out) const {
    int deg = terms_.empty() ? 0 : terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != deg) return false;
    if (degree_out) *degree_out = deg;
    return true;
}

void AlgebraElement::add_term(const Monomial& mono, const Integer& coeff) {
    accumulate(terms_, mono, coeff);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (n_ != o.n_ || parity_ != o.parity_) throw std::domain_error("ambient data mismatch");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (n_ != o.n_ || parity_ != o.parity_) throw std::domain_error("ambient data mismatch");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

AlgebraElement AlgebraElement::times_generator(int a, int c) const {
    if (a < 1 || c > n_ || a >= c) throw std::domain_error("generator must be canonical and in range");
    AlgebraElement out(n_, parity_);
    for (const auto& [m, coeff] : terms_) mono_times_gen(m, a, c, parity_, coeff, out.terms_);
    return out;
}

std::pair<std::vector<std::pair<int, int>>, int> display_factors(const Monomial& m,
                                                                 Parity parity) {
    std::vector<std::pair<int, int>> f = m.factors();
    int swaps = 0;
    for (size_t a = 0; a < f.size(); ++a)
        for (size_t b = a + 1; b < f.size(); ++b)
            if (f[b] < f[a]) ++swaps;
    std::sort(f.begin(), f.end());
    int sign = (parity == Parity::even && (swaps & 1)) ? -1 : 1;
    return {std::move(f), sign};
}

std::string AlgebraElement::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto [factors, sign] = display_factors(m, parity_);
        Integer v = c * sign;
        Integer mag = v < 0 ? Integer(-v) : v;
        if (first) {
            if (v < 0) os << '-';
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (mag != 1 || m.degree() == 0) {
            os << mag;
            if (m.degree() > 0) os << '*';
        }
        for (auto [i, j] : factors) os << "A[" << i << ',' << j << ']';
    }
    return os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.points() != b.points() || a.parity() != b.parity())
        throw std::domain_error("ambient data mismatch");
    AlgebraElement out(a.points(), a.parity());
    for (const auto& [mono, coeff] : b.terms()) {
        AlgebraElement cur = a;
        for (int h = 0; h < mono.degree(); ++h)
            cur = cur.times_generator(mono.bottom(h), mono.top(h));
        cur *= coeff;
        out += cur;
    }
    return out;
}

AlgebraElement normal_form(const std::vector<std::pair<int, int>>& word, int n, Parity parity) {
    AlgebraElement e = AlgebraElement::unit(n, parity);
    Integer sign = 1;
    for (auto [i, j] : word) {
        CanonicalGen g = canonical_generator(i, j, n, parity);
        if (g.zero) return AlgebraElement(n, parity);
        sign *= g.sign;
        e = e.times_generator(g.i, g.j);
        if (e.is_zero()) return e;
    }
    e *= sign;
    return e;
}

namespace {

void enumerate_basis(int n, int k, int min_top, Monomial& cur, std::vector<Monomial>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = min_top; j <= n - k + 1; ++j)
        for (int i = 1; i < j; ++i) {
            cur.push_factor(i, j);
            enumerate_basis(n, k - 1, j + 1, cur, out);
            cur.pop_factor();
        }
}

std::mutex g_basis_mutex;
std::map<std::pair<int, int>, std::vector<Monomial>> g_basis_cache;

}  // namespace

const std::vector<Monomial>& admissible_basis(int n, int k) {
    if (n < 1 || n > kMaxPoints) throw std::domain_error("point count out of range");
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto key = std::make_pair(n, k);
    auto it = g_basis_cache.find(key);
    if (it == g_basis_cache.end()) {
        std::vector<Monomial> out;
        if (k >= 0 && k <= n - 1) {
            Monomial cur;
            enumerate_basis(n, k, 2, cur, out);
            std::sort(out.begin(), out.end());
        }
        it = g_basis_cache.emplace(std::move(key), std::move(out)).first;
    }
    return it->second;
}

int basis_index(int n, const Monomial& mono) {
    const auto& basis = admissible_basis(n, mono.degree());
    auto it = std::lower_bound(basis.begin(), basis.end(), mono);
    if (it == basis.end() || !(*it == mono))
        throw std::logic_error("monomial is not admissible for this basis");
    return static_cast<int>(it - basis.begin());
}

Integer graded_dimension(int n, int k) {
    if (n < 1) throw std::domain_error("point count out of range");
    if (k < 0 || k > n - 1) return 0;
    std::vector<Integer> coeff(static_cast<size_t>(n), 0);
    coeff[0] = 1;
    for (int i = 1; i <= n - 1; ++i)
        for (int d = i; d >= 1; --d) coeff[static_cast<size_t>(d)] += Integer(i) * coeff[static_cast<size_t>(d - 1)];
    return coeff[static_cast<size_t>(k)];
}

std::array<std::uint8_t, kMaxPoints> flat_partition(const Monomial& mono, int n) {
    std::array<std::uint8_t, kMaxPoints> parent{};
    for (int v = 1; v <= n; ++v) parent[static_cast<size_t>(v - 1)] = static_cast<std::uint8_t>(v);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v - 1)] != v) v = parent[static_cast<size_t>(v - 1)];
        return v;
    };
    for (int h = 0; h < mono.degree(); ++h) {
        int a = find(mono.bottom(h)), b = find(mono.top(h));
        if (a != b) parent[static_cast<size_t>(std::max(a, b) - 1)] = static_cast<std::uint8_t>(std::min(a, b));
    }
    std::array<std::uint8_t, kMaxPoints> label{};
    for (int v = 1; v <= n; ++v) label[static_cast<size_t>(v - 1)] = static_cast<std::uint8_t>(find(v));
    return label;
}

}  // namespace cohomlab
