#include "lcsm/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "lcsm/errors.hpp"

namespace lcsm {

std::string format_vector(const AlignmentVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out.push_back(',');
        }
        out += std::to_string(v[i]);
    }
    return out;
}

AlignmentVector parse_vector(std::string_view text)
{
    AlignmentVector out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        std::string_view item = text.substr(start, end - start);
        if (!item.empty() && item.front() == '+') {
            item.remove_prefix(1);
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        require(ec == std::errc{} && ptr == item.data() + item.size() && !item.empty(),
                "bad alignment vector entry '" + std::string(item) + "'");
        out.v.push_back(value);
        start = end + 1;
    }
    return out;
}

bool CellDecomposition::any_ambiguous() const noexcept
{
    return std::find(ambiguous.begin(), ambiguous.end(), true) != ambiguous.end();
}

AlignmentModel::AlignmentModel(const Word& x, const Word& y, Letter dominant)
    : x_(x), y_(y), dominant_(dominant)
{
    cx_.assign(x.size() + 1, 0);
    cy_.assign(y.size() + 1, 0);
    Letter max_letter = dominant;
    for (std::size_t s = 1; s <= x.size(); ++s) {
        cx_[s] = cx_[s - 1] + (x[s - 1] == dominant ? 1 : 0);
        max_letter = std::max(max_letter, x[s - 1]);
    }
    for (std::size_t t = 1; t <= y.size(); ++t) {
        cy_[t] = cy_[t - 1] + (y[t - 1] == dominant ? 1 : 0);
        max_letter = std::max(max_letter, y[t - 1]);
    }
    y_positions_.resize(static_cast<std::size_t>(max_letter) + 1);
    for (std::size_t t = 1; t <= y.size(); ++t) {
        if (y[t - 1] != dominant) {
            y_positions_[y[t - 1]].push_back(t);
        }
    }
}

std::size_t AlignmentModel::non_dominant_total() const noexcept
{
    return (x_.size() - cx_.back()) + (y_.size() - cy_.back());
}

std::vector<IndexPair> AlignmentModel::minimal_pairs(IndexPair start, int diff) const
{
    std::vector<IndexPair> out;
    std::size_t best_t = y_.size() + 1;
    for (std::size_t s = start.i + 1; s <= x_.size(); ++s) {
        const Letter c = x_[s - 1];
        if (c == dominant_ || c >= y_positions_.size()) {
            continue;
        }
        // Required y-side dominant count over (start.j, t].
        const long long need = static_cast<long long>(cx_[s] - cx_[start.i]) - diff;
        if (need < 0) {
            continue;
        }
        const std::size_t target = cy_[start.j] + static_cast<std::size_t>(need);
        const auto& positions = y_positions_[c];
        const auto it = std::partition_point(positions.begin(), positions.end(), [&](std::size_t t) {
            return t <= start.j || cy_[t] < target;
        });
        if (it == positions.end() || cy_[*it] != target) {
            continue;
        }
        if (*it < best_t) {
            best_t = *it;
            out.push_back({s, *it});
        }
    }
    return out;
}

namespace {

struct CloseSearch {
    const AlignmentModel& model;
    const AlignmentVector& v;
    TieBreak tie;
    std::vector<IndexPair> chosen;
    std::vector<bool> ambiguous;
    std::vector<std::set<std::pair<std::size_t, std::size_t>>> dead;
    std::size_t deepest = 0;

    bool close(std::size_t cell, IndexPair start)
    {
        if (cell == v.size()) {
            return true;
        }
        deepest = std::max(deepest, cell);
        if (dead[cell].contains({start.i, start.j})) {
            return false;
        }
        const auto pairs = model.minimal_pairs(start, v[cell]);
        const std::size_t tries = tie == TieBreak::Lexicographic ? std::min<std::size_t>(1, pairs.size())
                                                                 : pairs.size();
        for (std::size_t p = 0; p < tries; ++p) {
            chosen[cell] = pairs[p];
            ambiguous[cell] = pairs.size() > 1;
            if (close(cell + 1, pairs[p])) {
                return true;
            }
        }
        dead[cell].insert({start.i, start.j});
        return false;
    }
};

}  // namespace

DecodeResult AlignmentModel::decode(const AlignmentVector& v, TieBreak tie) const
{
    CloseSearch search{*this, v, tie, std::vector<IndexPair>(v.size()), std::vector<bool>(v.size()),
                       std::vector<std::set<std::pair<std::size_t, std::size_t>>>(v.size()), 0};
    if (!search.close(0, {0, 0})) {
        return Inadmissible{search.deepest + 1};
    }

    CellDecomposition d;
    d.v = v;
    d.pi.push_back(0);
    d.nu.push_back(0);
    d.ambiguous = search.ambiguous;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const IndexPair prev{d.pi.back(), d.nu.back()};
        const IndexPair close = search.chosen[i];
        d.pi.push_back(close.i);
        d.nu.push_back(close.j);
        const std::size_t a = x_dominant_between(prev.i, close.i);
        const std::size_t b = y_dominant_between(prev.j, close.j);
        d.x_dominant.push_back(a);
        d.y_dominant.push_back(b);
        d.aligned_dominant.push_back(std::min(a, b));
        d.cell_letters.push_back(x_[close.i - 1]);
    }
    d.trailing = std::min(x_dominant_between(d.pi.back(), x_.size()),
                          y_dominant_between(d.nu.back(), y_.size()));
    return d;
}

std::optional<CellDecomposition> AlignmentModel::decode_admissible(const AlignmentVector& v) const
{
    auto result = decode(v);
    if (auto* d = std::get_if<CellDecomposition>(&result)) {
        return std::move(*d);
    }
    return std::nullopt;
}

AlignmentVector AlignmentModel::encode(const MatchedAlignment& a) const
{
    AlignmentVector out;
    IndexPair prev{0, 0};
    for (const auto& p : a.pairs) {
        if (x_[p.i - 1] == dominant_) {
            continue;
        }
        const long long dx = static_cast<long long>(x_dominant_between(prev.i, p.i));
        const long long dy = static_cast<long long>(y_dominant_between(prev.j, p.j));
        out.v.push_back(static_cast<int>(dx - dy));
        prev = p;
    }
    return out;
}

DecodeResult decode(const Word& x, const Word& y, const AlignmentVector& v, Letter dominant,
                    TieBreak tie)
{
    return AlignmentModel(x, y, dominant).decode(v, tie);
}

std::size_t lambda_c(const CellDecomposition& d)
{
    std::size_t total = d.cells() + d.trailing;
    for (std::size_t s : d.aligned_dominant) {
        total += s;
    }
    return total;
}

namespace {

struct AdmissibleWalker {
    const AlignmentModel& model;
    std::size_t k_max;
    std::size_t budget;
    int lo;
    int hi;
    AdmissibleEnumeration out;
    std::vector<int> prefix;

    // `states` holds every boundary reachable through minimal closing pairs
    // for `prefix`; v is admissible iff that set is non-empty.
    void extend(const std::vector<IndexPair>& states)
    {
        if (prefix.size() == k_max) {
            return;
        }
        for (int w = lo; w <= hi; ++w) {
            if (out.visited >= budget) {
                out.complete = false;
                return;
            }
            ++out.visited;
            std::vector<IndexPair> next;
            for (const auto& st : states) {
                const auto pairs = model.minimal_pairs(st, w);
                next.insert(next.end(), pairs.begin(), pairs.end());
            }
            if (next.empty()) {
                continue;
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            prefix.push_back(w);
            out.vectors.emplace_back(prefix);
            extend(next);
            prefix.pop_back();
            if (!out.complete) {
                return;
            }
        }
    }
};

}  // namespace

AdmissibleEnumeration enumerate_admissible(const Word& x, const Word& y, std::size_t k_max,
                                           std::size_t budget, Letter dominant)
{
    const AlignmentModel model(x, y, dominant);
    AdmissibleWalker walker{model,
                            k_max,
                            budget,
                            -static_cast<int>(model.y_dominant_total()),
                            static_cast<int>(model.x_dominant_total()),
                            {},
                            {}};
    walker.out.vectors.emplace_back();
    walker.extend({IndexPair{0, 0}});
    return std::move(walker.out);
}

AlignmentVector encode_optimal(const Word& x, const Word& y, Letter dominant)
{
    return AlignmentModel(x, y, dominant).encode(lcs_backtrack(x, y));
}

WeakSideStats weak_side(const AlignmentModel& model, const CellDecomposition& d)
{
    WeakSideStats out;
    out.n_gt1 = model.non_dominant_total();
    for (std::size_t i = 1; i <= d.cells(); ++i) {
        std::size_t count = 0;
        if (d.v[i - 1] < 0) {
            const std::size_t from = d.pi[i - 1];
            const std::size_t to = d.pi[i] - 1;
            count = (to - from) - model.x_dominant_between(from, to);
        } else if (d.v[i - 1] > 0) {
            const std::size_t from = d.nu[i - 1];
            const std::size_t to = d.nu[i] - 1;
            count = (to - from) - model.y_dominant_between(from, to);
        }
        out.per_cell.push_back(count);
        out.n_v_minus += count;
    }
    return out;
}

WeakSideStats weak_side(const Word& x, const Word& y, const CellDecomposition& d, Letter dominant)
{
    return weak_side(AlignmentModel(x, y, dominant), d);
}

std::optional<CellSplit> find_split(const AlignmentModel& model, const CellDecomposition& d,
                                    std::size_t cell)
{
    require(cell >= 1 && cell <= d.cells(), "cell index out of range");
    require(d.v[cell - 1] == 0, "only zero cells can be broken");
    const Word& x = model.x();
    const Word& y = model.y();
    const std::size_t px = d.pi[cell - 1];
    const std::size_t py = d.nu[cell - 1];
    for (std::size_t j = px + 1; j < d.pi[cell]; ++j) {
        if (x[j - 1] == model.dominant()) {
            continue;
        }
        const auto ax = static_cast<long long>(model.x_dominant_between(px, j - 1));
        for (std::size_t jp = py + 1; jp < d.nu[cell]; ++jp) {
            if (y[jp - 1] != x[j - 1]) {
                continue;
            }
            const auto ay = static_cast<long long>(model.y_dominant_between(py, jp - 1));
            const long long diff = ax - ay;
            if (diff == 1 || diff == -1) {
                return CellSplit{j, jp, static_cast<int>(diff)};
            }
        }
    }
    return std::nullopt;
}

bool is_breakable(const Word& x, const Word& y, const CellDecomposition& d, std::size_t cell,
                  Letter dominant)
{
    return find_split(AlignmentModel(x, y, dominant), d, cell).has_value();
}

AlignmentVector break_cell(const AlignmentModel& model, const AlignmentVector& v, std::size_t cell)
{
    const auto d = model.decode_admissible(v);
    require(d.has_value(), "cannot break a cell of an inadmissible vector");
    const auto split = find_split(model, *d, cell);
    require(split.has_value(), "cell " + std::to_string(cell) + " is not breakable");
    AlignmentVector out;
    out.v.reserve(v.size() + 1);
    out.v.insert(out.v.end(), v.v.begin(), v.v.begin() + static_cast<long>(cell - 1));
    out.v.push_back(split->diff);
    out.v.push_back(-split->diff);
    out.v.insert(out.v.end(), v.v.begin() + static_cast<long>(cell), v.v.end());
    if (!model.decode_admissible(out)) {
        throw std::logic_error("broken vector failed to re-decode");
    }
    return out;
}

AlignmentVector break_cell(const Word& x, const Word& y, const AlignmentVector& v,
                           std::size_t cell, Letter dominant)
{
    return break_cell(AlignmentModel(x, y, dominant), v, cell);
}

namespace {

struct BnCriterion {
    double lower;   // K N_{>1} / m
    double length;  // K N_{>1} / (2m)

    bool operator()(std::size_t n_v_minus, std::size_t cells) const noexcept
    {
        return static_cast<double>(n_v_minus) >= lower && 2.0 * static_cast<double>(cells) <= length;
    }
};

}  // namespace

BnResult in_B_n(const Word& x, const Word& y, double K, std::size_t m, std::size_t search_budget,
                Letter dominant)
{
    const AlignmentModel model(x, y, dominant);
    const double n_gt1 = static_cast<double>(model.non_dominant_total());
    const BnCriterion criterion{K * n_gt1 / static_cast<double>(m),
                                K * n_gt1 / (2.0 * static_cast<double>(m))};
    BnResult out;

    if (model.non_dominant_total() == 0) {
        out.status = Membership::Member;
        out.witness = AlignmentVector{};
        out.exhaustive = true;
        out.candidates = 1;
        return out;
    }

    const auto optimal = enumerate_optimal_alignments(x, y, search_budget);
    if (optimal.complete) {
        std::set<AlignmentVector> seen;
        for (const auto& a : optimal.alignments) {
            seen.insert(model.encode(a));
        }
        out.exhaustive = true;
        out.candidates = seen.size();
        for (const auto& v : seen) {
            const auto d = model.decode_admissible(v);
            if (!d) {
                throw std::logic_error("optimal encoding is inadmissible: " + format_vector(v));
            }
            const auto ws = weak_side(model, *d);
            out.best_n_v_minus = std::max(out.best_n_v_minus, ws.n_v_minus);
            if (!out.witness && criterion(ws.n_v_minus, v.size())) {
                out.witness = v;
            }
        }
        out.status = out.witness ? Membership::Member : Membership::NotMember;
        return out;
    }

    // Breaking search: break the zero cell that most increases N_v^- while
    // the length constraint allows another cell.
    AlignmentVector v = model.encode(lcs_backtrack(x, y));
    auto d = model.decode_admissible(v);
    auto ws = weak_side(model, *d);
    out.candidates = 1;
    out.best_n_v_minus = ws.n_v_minus;
    while (!criterion(ws.n_v_minus, v.size()) && 2.0 * static_cast<double>(v.size() + 1) <= criterion.length) {
        std::optional<AlignmentVector> best;
        std::size_t best_minus = 0;
        for (std::size_t cell = 1; cell <= v.size(); ++cell) {
            if (v[cell - 1] != 0 || !find_split(model, *d, cell)) {
                continue;
            }
            auto candidate = break_cell(model, v, cell);
            const auto cd = model.decode_admissible(candidate);
            const auto cw = weak_side(model, *cd);
            ++out.candidates;
            if (!best || cw.n_v_minus > best_minus) {
                best = std::move(candidate);
                best_minus = cw.n_v_minus;
            }
        }
        if (!best) {
            break;
        }
        v = std::move(*best);
        d = model.decode_admissible(v);
        ws = weak_side(model, *d);
        out.best_n_v_minus = std::max(out.best_n_v_minus, ws.n_v_minus);
    }
    if (criterion(ws.n_v_minus, v.size())) {
        out.status = Membership::Member;
        out.witness = v;
    } else {
        out.status = Membership::Unknown;
    }
    return out;
}

}  // namespace lcsm
