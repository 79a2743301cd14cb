#include "cohomlab/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cohomlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition Partition::with_fixed_point() const {
    std::vector<int> p = parts_;
    p.push_back(1);
    return Partition(p);
}

Partition Partition::without_fixed_point() const {
    if (parts_.empty() || parts_.back() != 1)
        throw std::domain_error("partition has no part equal to 1");
    std::vector<int> p(parts_.begin(), parts_.end() - 1);
    return Partition(p);
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = sum_ <=> o.sum_; c != 0) return c;
    // Reverse lexicographic: (m) first. Lex-greater part sequence sorts first.
    if (parts_ == o.parts_) return std::strong_ordering::equal;
    return o.parts_ < parts_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string t = text;
    for (char& c : t)
        if (c == '[' || c == ']' || c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream is(t);
    int v;
    while (is >> v) parts.push_back(v);
    return Partition(parts);
}

namespace {

void enumerate_partitions(int m, int max_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
    if (m == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_partitions(m - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex g_partitions_mutex;
std::map<int, std::vector<Partition>> g_partitions_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int m) {
    if (m < 1) throw std::domain_error("partitions_of requires m >= 1");
    std::lock_guard<std::mutex> lock(g_partitions_mutex);
    auto it = g_partitions_cache.find(m);
    if (it == g_partitions_cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        enumerate_partitions(m, m, cur, out);
        it = g_partitions_cache.emplace(m, std::move(out)).first;
    }
    return it->second;
}

int partition_index(const Partition& lambda) {
    const auto& all = partitions_of(lambda.sum());
    auto it = std::find(all.begin(), all.end(), lambda);
    if (it == all.end()) throw std::logic_error("partition not found in its own class list");
    return static_cast<int>(it - all.begin());
}

Integer centralizer_order(const Partition& lambda) {
    Integer z = 1;
    int run_value = 0, run_length = 0;
    auto flush = [&] {
        for (int i = 1; i <= run_length; ++i) z *= Integer(run_value) * i;
    };
    for (int p : lambda.parts()) {
        if (p == run_value) {
            ++run_length;
        } else {
            flush();
            run_value = p;
            run_length = 1;
        }
    }
    flush();
    return z;
}

Integer class_size(const Partition& lambda) {
    return factorial(lambda.sum()) / centralizer_order(lambda);
}

Integer irreducible_dimension(const Partition& lambda) {
    const auto& p = lambda.parts();
    const int rows = lambda.num_parts();
    std::vector<int> conj(rows == 0 ? 0 : static_cast<size_t>(p[0]), 0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < p[static_cast<size_t>(r)]; ++c) ++conj[static_cast<size_t>(c)];
    Integer hooks = 1;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < p[static_cast<size_t>(r)]; ++c) {
            int arm = p[static_cast<size_t>(r)] - c - 1;
            int leg = conj[static_cast<size_t>(c)] - r - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(lambda.sum()) / hooks;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (int r = 0; r <= lambda.num_parts(); ++r) {
        if (r > 0 && r < lambda.num_parts() && p[static_cast<size_t>(r)] == p[static_cast<size_t>(r - 1)])
            continue;  // would break monotonicity
        if (r == lambda.num_parts()) {
            std::vector<int> q = p;
            q.push_back(1);
            out.emplace_back(q);
        } else if (r == 0 || p[static_cast<size_t>(r)] < p[static_cast<size_t>(r - 1)]) {
            std::vector<int> q = p;
            ++q[static_cast<size_t>(r)];
            out.emplace_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (int r = 0; r < lambda.num_parts(); ++r) {
        bool corner = (r + 1 == lambda.num_parts()) || p[static_cast<size_t>(r + 1)] < p[static_cast<size_t>(r)];
        if (!corner) continue;
        std::vector<int> q = p;
        if (--q[static_cast<size_t>(r)] == 0) q.pop_back();
        out.emplace_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cohomlab
