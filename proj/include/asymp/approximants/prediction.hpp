#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asymp/numeric/errors.hpp"

namespace asymp {

namespace detail {
template <typename T>
T param_distance(const std::vector<T>& a, const std::vector<T>& b) {
    using std::abs;
    T d(0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        T e = abs(a[k] - b[k]);
        if (e > d) d = e;
    }
    return d;
}
}  // namespace detail

template <typename T>
struct PredictionRecord {
    int N = 0;
    std::vector<T> params;
    T residual{0};
    int branch_id = -1;
    bool canonical = true;
};

/// Per-order roots of a prediction equation grouped into branches.
template <typename T>
struct ParameterPrediction {
    std::string family;
    std::vector<std::string> param_names;
    std::vector<PredictionRecord<T>> records;
    int selected_branch = -1;
    std::vector<T> converged_values;
    int optimal_truncation_N = 0;

    /// Records of one branch in order of N.
    std::vector<PredictionRecord<T>> branch(int id) const {
        std::vector<PredictionRecord<T>> out;
        for (const auto& r : records)
            if (r.branch_id == id) out.push_back(r);
        return out;
    }
    std::vector<PredictionRecord<T>> selected() const { return branch(selected_branch); }

    std::optional<PredictionRecord<T>> at(int N) const {
        for (const auto& r : records)
            if (r.branch_id == selected_branch && r.N == N) return r;
        return std::nullopt;
    }

    /// The selected branch at N or, before that branch begins, the root at N
    /// nearest to its first point.
    std::optional<PredictionRecord<T>> best_at(int N) const {
        if (auto r = at(N)) return r;
        auto sel = selected();
        if (sel.empty() || N > sel.front().N) return std::nullopt;
        std::optional<PredictionRecord<T>> best;
        T bd(0);
        for (const auto& r : records) {
            if (r.N != N) continue;
            T d = detail::param_distance(r.params, sel.front().params);
            if (!best || d < bd) {
                best = r;
                bd = d;
            }
        }
        return best;
    }

    /// |p_{N_{i+1}} - p_{N_i}| along the selected branch, keyed by N_{i+1}.
    std::vector<std::pair<int, std::vector<T>>> successive_differences() const {
        using std::abs;
        auto b = selected();
        std::vector<std::pair<int, std::vector<T>>> out;
        for (std::size_t i = 1; i < b.size(); ++i) {
            std::vector<T> d;
            for (std::size_t k = 0; k < b[i].params.size(); ++k) d.push_back(abs(b[i].params[k] - b[i - 1].params[k]));
            out.emplace_back(b[i].N, std::move(d));
        }
        return out;
    }

    std::vector<int> branch_ids() const {
        std::vector<int> ids;
        for (const auto& r : records)
            if (std::find(ids.begin(), ids.end(), r.branch_id) == ids.end()) ids.push_back(r.branch_id);
        return ids;
    }
};


/// Links roots of consecutive orders by greedy nearest pairing, then flags the
/// branch with the smallest final successive difference among those reaching
/// the last order, and locates the optimal truncation order on it.
template <typename T>
void assign_branches(ParameterPrediction<T>& pred) {
    std::map<int, std::vector<std::size_t>> by_n;
    for (std::size_t i = 0; i < pred.records.size(); ++i) by_n[pred.records[i].N].push_back(i);

    int next_id = 0;
    std::map<int, std::size_t> alive;  // branch id -> last record index
    for (auto& [N, idx] : by_n) {
        struct Pair { T d; int branch; std::size_t rec; };
        std::vector<Pair> pairs;
        for (const auto& [id, last] : alive)
            for (std::size_t r : idx) pairs.push_back({detail::param_distance(pred.records[last].params, pred.records[r].params), id, r});
        std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });
        std::map<int, std::size_t> next;
        for (const auto& p : pairs) {
            if (next.count(p.branch) || pred.records[p.rec].branch_id >= 0) continue;
            pred.records[p.rec].branch_id = p.branch;
            next[p.branch] = p.rec;
        }
        for (std::size_t r : idx) {
            if (pred.records[r].branch_id < 0) {
                pred.records[r].branch_id = next_id;
                next[next_id++] = r;
            }
        }
        alive = std::move(next);
    }

    pred.selected_branch = -1;
    if (pred.records.empty()) return;
    const int last_N = by_n.rbegin()->first;
    std::optional<T> best;
    for (const auto& [id, last] : alive) {
        if (pred.records[last].N != last_N) continue;
        auto b = pred.branch(id);
        if (b.size() < 2) {
            if (pred.selected_branch < 0) pred.selected_branch = id;
            continue;
        }
        T d = detail::param_distance(b[b.size() - 1].params, b[b.size() - 2].params);
        if (!best || d < *best) {
            best = d;
            pred.selected_branch = id;
        }
    }

    auto sel = pred.selected();
    if (sel.empty()) return;
    pred.converged_values = sel.back().params;
    auto diffs = pred.successive_differences();
    pred.optimal_truncation_N = sel.back().N;
    for (std::size_t i = 0; i + 2 < diffs.size(); ++i) {
        if (!(diffs[i + 1].second[0] < diffs[i].second[0]) && !(diffs[i + 2].second[0] < diffs[i + 1].second[0])) {
            pred.optimal_truncation_N = sel[i + 1].N;
            pred.converged_values = sel[i + 1].params;
            break;
        }
    }
}

}  // namespace asymp
