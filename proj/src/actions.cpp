#include "cohomlab/actions.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <numeric>
#include <thread>

#include "cohomlab/character_table.hpp"

namespace cohomlab {

namespace {

// Run fn(i) for i in [0, count) across a few worker threads; results must be
// written to index-addressed storage by the callers.
template <typename F>
void parallel_for(int count, F&& fn) {
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&fn, w, workers, count] {
            for (int i = w; i < count; i += workers) fn(i);
        }));
    for (auto& f : futs) f.get();
}

// (0,1) substitution on one canonical generator, parity check elided so the
// even-parity probe can reuse it.
AlgebraElement s0_image_of_generator(int n, Parity parity, int i, int j) {
    AlgebraElement out(n, parity);
    Monomial m;
    if (i == 1) {
        m.push_factor(1, j);
        out.add_term(m, -1);
        return out;
    }
    m.push_factor(i, j);
    out.add_term(m, 1);
    Monomial m1;
    m1.push_factor(1, j);
    out.add_term(m1, -1);
    Monomial m2;
    m2.push_factor(1, i);
    out.add_term(m2, 1);
    return out;
}

AlgebraElement act_s0_impl(const AlgebraElement& x) {
    const int n = x.points();
    AlgebraElement out(n, x.parity());
    for (const auto& [mono, coeff] : x.terms()) {
        AlgebraElement cur = AlgebraElement::unit(n, x.parity());
        cur *= coeff;
        for (int h = 0; h < mono.degree(); ++h)
            cur = multiply(cur, s0_image_of_generator(n, x.parity(), mono.bottom(h), mono.top(h)));
        out += cur;
    }
    return out;
}

int permutation_sign(const Permutation& p) {
    Partition t = cycle_type(p);
    return ((t.sum() - t.num_parts()) % 2 == 0) ? 1 : -1;
}

}  // namespace

AlgebraElement act_permutation(const Permutation& sigma, const AlgebraElement& x) {
    if (sigma.lo() != 1 || sigma.hi() != x.points())
        throw std::domain_error("permutation ground set does not match the ambient points");
    AlgebraElement out(x.points(), x.parity());
    for (const auto& [mono, coeff] : x.terms()) {
        std::vector<std::pair<int, int>> word;
        word.reserve(static_cast<size_t>(mono.degree()));
        for (int h = 0; h < mono.degree(); ++h)
            word.emplace_back(sigma(mono.bottom(h)), sigma(mono.top(h)));
        AlgebraElement nf = normal_form(word, x.points(), x.parity());
        nf *= coeff;
        out += nf;
    }
    return out;
}

AlgebraElement act_s0(const AlgebraElement& x) {
    if (x.parity() != Parity::odd)
        throw UnsupportedActionError(
            "the explicit extended action exists for odd parity only; "
            "even-parity extended characters come from the recursion");
    return act_s0_impl(x);
}

AlgebraElement act_extended(const Permutation& g, const AlgebraElement& x) {
    if (g.lo() != 0 || g.hi() != x.points())
        throw std::domain_error("extended permutation must act on {0..n}");
    if (x.parity() != Parity::odd)
        throw UnsupportedActionError("extended action matrices require odd parity");
    std::vector<int> word = coxeter_word(g);
    AlgebraElement cur = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 0)
            cur = act_s0_impl(cur);
        else
            cur = act_permutation(Permutation::transposition(1, x.points(), *it, *it + 1), cur);
    }
    return cur;
}

ActionMatrix::ActionMatrix(int n, int k, Parity parity, ActionView view)
    : n_(n), k_(k), dim_(static_cast<int>(admissible_basis(n, k).size())), parity_(parity), view_(view) {
    cols_.resize(static_cast<size_t>(dim_));
}

ActionMatrix ActionMatrix::identity(int n, int k, Parity parity, ActionView view) {
    ActionMatrix m(n, k, parity, view);
    for (int c = 0; c < m.dim_; ++c) m.cols_[static_cast<size_t>(c)][c] = 1;
    return m;
}

Integer ActionMatrix::trace() const {
    Integer t = 0;
    for (int c = 0; c < dim_; ++c) {
        const auto& col = cols_[static_cast<size_t>(c)];
        if (auto it = col.find(c); it != col.end()) t += it->second;
    }
    return t;
}

ActionMatrix ActionMatrix::operator*(const ActionMatrix& o) const {
    if (n_ != o.n_ || k_ != o.k_ || parity_ != o.parity_)
        throw std::domain_error("matrix shape mismatch");
    ActionMatrix out(n_, k_, parity_, view_);
    for (int c = 0; c < dim_; ++c) {
        auto& dst = out.cols_[static_cast<size_t>(c)];
        for (const auto& [mid, w] : o.cols_[static_cast<size_t>(c)])
            for (const auto& [row, v] : cols_[static_cast<size_t>(mid)]) {
                Integer& slot = dst[row];
                slot += v * w;
                if (slot == 0) dst.erase(row);
            }
    }
    return out;
}

bool ActionMatrix::operator==(const ActionMatrix& o) const {
    return n_ == o.n_ && k_ == o.k_ && parity_ == o.parity_ && cols_ == o.cols_;
}

std::vector<std::vector<Integer>> ActionMatrix::to_dense() const {
    std::vector<std::vector<Integer>> dense(static_cast<size_t>(dim_),
                                            std::vector<Integer>(static_cast<size_t>(dim_), 0));
    for (int c = 0; c < dim_; ++c)
        for (const auto& [row, v] : cols_[static_cast<size_t>(c)])
            dense[static_cast<size_t>(row)][static_cast<size_t>(c)] = v;
    return dense;
}

std::map<int, Integer> coordinates(const AlgebraElement& x, int k) {
    std::map<int, Integer> out;
    for (const auto& [mono, coeff] : x.terms()) {
        if (mono.degree() != k) throw std::domain_error("element is not homogeneous of degree k");
        out[basis_index(x.points(), mono)] = coeff;
    }
    return out;
}

namespace {

// Sparse matrices of the Coxeter generators on one graded piece, built once.
// Index 0 holds s_0 (odd parity only), index j >= 1 the transposition
// (j, j+1) of the canonical action.
const ActionMatrix& generator_matrix(int n, int k, Parity parity, int j) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, Parity, int>, ActionMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, k, parity, j);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    const auto& basis = admissible_basis(n, k);
    ActionMatrix m(n, k, parity, j == 0 ? ActionView::extended : ActionView::canonical);
    for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
        AlgebraElement b(n, parity);
        b.add_term(basis[static_cast<size_t>(c)], 1);
        AlgebraElement img = j == 0
                                 ? act_s0_impl(b)
                                 : act_permutation(Permutation::transposition(1, n, j, j + 1), b);
        m.col(c) = coordinates(img, k);
    }
    return cache.emplace(std::move(key), std::move(m)).first->second;
}

ActionMatrix extended_matrix(const Permutation& g, int n, int k, Parity parity) {
    std::vector<int> word = coxeter_word(g);
    ActionMatrix m = ActionMatrix::identity(n, k, parity, ActionView::extended);
    for (int letter : word) m = m * generator_matrix(n, k, parity, letter);
    return m;
}

}  // namespace

ActionMatrix action_matrix(const Permutation& g, int n, int k, Parity parity) {
    if (g.lo() == 1 && g.hi() == n) {
        const auto& basis = admissible_basis(n, k);
        ActionMatrix m(n, k, parity, ActionView::canonical);
        for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
            AlgebraElement b(n, parity);
            b.add_term(basis[static_cast<size_t>(c)], 1);
            m.col(c) = coordinates(act_permutation(g, b), k);
        }
        return m;
    }
    if (g.lo() == 0 && g.hi() == n) {
        if (parity != Parity::odd)
            throw UnsupportedActionError("extended action matrices require odd parity");
        return extended_matrix(g, n, k, parity);
    }
    throw std::domain_error("permutation must act on {1..n} or {0..n}");
}

namespace {

bool flat_is_stable(const std::array<std::uint8_t, kMaxPoints>& lab, const Permutation& sigma,
                    int n) {
    std::array<std::uint8_t, kMaxPoints> block_min{};
    for (int v = 1; v <= n; ++v) {
        int root = lab[static_cast<size_t>(v - 1)];
        int img = sigma(v);
        auto& slot = block_min[static_cast<size_t>(root - 1)];
        if (slot == 0 || img < slot) slot = static_cast<std::uint8_t>(img);
    }
    for (int v = 1; v <= n; ++v) {
        int img_lab = block_min[static_cast<size_t>(lab[static_cast<size_t>(v - 1)] - 1)];
        if (img_lab != lab[static_cast<size_t>(sigma(v) - 1)]) return false;
    }
    return true;
}

}  // namespace

ClassFunction canonical_degree_character(int n, int k, Parity parity, int max_n) {
    if (n > max_n)
        throw ResourceLimitError("trace computation beyond the configured point ceiling");
    const auto& classes = partitions_of(n);
    const auto& basis = admissible_basis(n, k);
    ClassFunction out(n);
    std::vector<Integer> traces(classes.size());

    // Straightening keeps every term inside the flat of its input monomial,
    // and relabelling by sigma moves that flat to its sigma-image; only
    // monomials with a sigma-stable flat can contribute to the diagonal.
    parallel_for(static_cast<int>(classes.size()), [&](int ci) {
        const Partition& mu = classes[static_cast<size_t>(ci)];
        if (mu.multiplicity(1) == n) {
            traces[static_cast<size_t>(ci)] = graded_dimension(n, k);
            return;
        }
        Permutation rep = class_representative(1, mu);
        Integer tr = 0;
        for (const Monomial& b : basis) {
            if (!flat_is_stable(flat_partition(b, n), rep, n)) continue;
            std::vector<std::pair<int, int>> word;
            word.reserve(static_cast<size_t>(b.degree()));
            for (int h = 0; h < b.degree(); ++h)
                word.emplace_back(rep(b.bottom(h)), rep(b.top(h)));
            AlgebraElement img = normal_form(word, n, parity);
            if (auto it = img.terms().find(b); it != img.terms().end()) tr += it->second;
        }
        traces[static_cast<size_t>(ci)] = tr;
    });

    for (size_t ci = 0; ci < classes.size(); ++ci) out.at_index(ci) = Rational(traces[ci]);
    return out;
}

ClassFunction extended_degree_character_matrix(int n, int k, int max_n) {
    if (n > max_n)
        throw ResourceLimitError("trace computation beyond the configured point ceiling");
    const auto& classes = partitions_of(n + 1);
    ClassFunction out(n + 1);
    std::vector<Integer> traces(classes.size());
    parallel_for(static_cast<int>(classes.size()), [&](int ci) {
        const Partition& mu = classes[static_cast<size_t>(ci)];
        if (mu.multiplicity(1) == n + 1) {
            traces[static_cast<size_t>(ci)] = graded_dimension(n, k);
            return;
        }
        Permutation rep = class_representative(0, mu);
        traces[static_cast<size_t>(ci)] = extended_matrix(rep, n, k, Parity::odd).trace();
    });
    for (size_t ci = 0; ci < classes.size(); ++ci) out.at_index(ci) = Rational(traces[ci]);
    return out;
}

AlgebraElement antisymmetrizer(int n, Parity parity) {
    if (parity != Parity::odd)
        throw UnsupportedActionError(
            "no copy of the sign representation exists for even parity");
    if (n < 2) throw std::domain_error("antisymmetrizer requires n >= 2");
    const int pairs = n / 2;
    AlgebraElement out(n, Parity::odd);
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        Permutation sigma(1, img);
        std::vector<std::pair<int, int>> word;
        word.reserve(static_cast<size_t>(pairs));
        for (int s = 0; s < pairs; ++s)
            word.emplace_back(img[static_cast<size_t>(2 * s)], img[static_cast<size_t>(2 * s + 1)]);
        AlgebraElement term = normal_form(word, n, Parity::odd);
        term *= permutation_sign(sigma);
        out += term;
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

CheckReport verify_extended_relations(int n, Parity parity) {
    CheckReport report;
    const std::string tag = parity == Parity::odd ? "" : " [even-parity probe]";

    // (a) involution on the degree-one basis
    {
        bool ok = true;
        for (const Monomial& b : admissible_basis(n, 1)) {
            AlgebraElement x(n, parity);
            x.add_term(b, 1);
            if (!(act_s0_impl(act_s0_impl(x)) == x)) {
                ok = false;
                break;
            }
        }
        report.add("s0 involution on degree 1 (n=" + std::to_string(n) + ")" + tag, ok);
    }

    // (b) braid and commutation identities on every graded piece
    for (int k = 0; k <= n - 1; ++k) {
        const ActionMatrix& s0 = generator_matrix(n, k, parity, 0);
        const ActionMatrix& s1 = generator_matrix(n, k, parity, 1);
        bool braid = (s0 * s1) * s0 == (s1 * s0) * s1;
        report.add("braid s0s1s0=s1s0s1 (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")" + tag,
                   braid);
        bool comm = true;
        for (int j = 2; j <= n - 1; ++j) {
            const ActionMatrix& sj = generator_matrix(n, k, parity, j);
            if (!(s0 * sj == sj * s0)) {
                comm = false;
                break;
            }
        }
        report.add("commutation s0sj=sjs0, j>=2 (n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                       ")" + tag,
                   comm);
    }

    // (c) invariance of the relation ideal under (0,1), by index case
    {
        auto s0_of_gen = [&](int i, int j) {
            AlgebraElement g = AlgebraElement::generator(n, parity, i, j);
            return act_s0_impl(g);
        };
        bool case_i1 = true, case_j1 = true, case_other = true;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = j; k <= n; ++k) {
                    AlgebraElement lhs = multiply(s0_of_gen(i, j), s0_of_gen(i, k));
                    AlgebraElement rhs =
                        multiply(s0_of_gen(k, j), s0_of_gen(i, k) - s0_of_gen(i, j));
                    bool ok = lhs == rhs;
                    if (i == 1)
                        case_i1 = case_i1 && ok;
                    else if (j == 1)
                        case_j1 = case_j1 && ok;
                    else
                        case_other = case_other && ok;
                }
        report.add("(0,1)-invariance of rel3, case i=1 (n=" + std::to_string(n) + ")" + tag, case_i1);
        report.add("(0,1)-invariance of rel3, case j=1 (n=" + std::to_string(n) + ")" + tag, case_j1);
        report.add("(0,1)-invariance of rel3, case i,j,k!=1 (n=" + std::to_string(n) + ")" + tag,
                   case_other);
    }
    return report;
}

}  // namespace cohomlab
