#include "geospec/trellis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "geospec/poly.hpp"

namespace geospec {

namespace {

// Echelon bases of the suffix column spans of H, sharing one append-only row
// pool: span{h_t..h_{n-1}} is exactly the first count_at[t] pool rows. A
// partial syndrome is co-reachable at stage t iff it lies in that span.
class SuffixSpans {
public:
    SuffixSpans(const FieldMatrix& h) : field_(h.field), m_(h.rows) {
        const std::size_t n = h.cols;
        count_at_.assign(n + 1, 0);
        row_with_lead_.assign(m_, -1);
        for (std::size_t t = n; t-- > 0;) {
            Word col(m_);
            for (std::size_t r = 0; r < m_; ++r) col[r] = h.at(r, t);
            insert(std::move(col));
            count_at_[t] = rows_.size();
        }
    }

    bool member(Word v, std::size_t t) const {
        const std::size_t limit = count_at_[t];
        for (std::size_t lead = 0; lead < m_; ++lead) {
            if (v[lead] == 0) continue;
            const int ri = row_with_lead_[lead];
            if (ri < 0 || static_cast<std::size_t>(ri) >= limit) return false;
            subtract_row(v, static_cast<std::size_t>(ri), v[lead]);
        }
        return true;
    }

private:
    void insert(Word v) {
        for (std::size_t lead = 0; lead < m_; ++lead) {
            if (v[lead] == 0) continue;
            const int ri = row_with_lead_[lead];
            if (ri < 0) {
                const int s = field_.inv(v[lead]);
                for (auto& x : v) x = static_cast<std::uint8_t>(field_.mul(x, s));
                row_with_lead_[lead] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return;
            }
            subtract_row(v, static_cast<std::size_t>(ri), v[lead]);
        }
    }

    void subtract_row(Word& v, std::size_t ri, int factor) const {
        const Word& row = rows_[ri];
        for (std::size_t i = 0; i < m_; ++i)
            v[i] = static_cast<std::uint8_t>(field_.sub(v[i], field_.mul(factor, row[i])));
    }

    PrimeField field_;
    std::size_t m_;
    std::vector<Word> rows_;            // unit-lead echelon rows, distinct leads
    std::vector<int> row_with_lead_;
    std::vector<std::size_t> count_at_;
};

}  // namespace

Trellis Trellis::build(const LinearCode& code) {
    const PrimeField f = code.field();
    const std::size_t n = code.n();
    const std::size_t m = code.parity().rows;   // syndrome dimension n-k
    const int q = code.q();

    SuffixSpans co_reachable(code.parity());

    Trellis tr(code);
    tr.state_syndromes_.resize(n + 1);
    tr.sections_.resize(n);
    tr.state_syndromes_[0] = {Word(m, 0)};

    for (std::size_t t = 0; t < n; ++t) {
        Word h(m);
        for (std::size_t r = 0; r < m; ++r) h[r] = code.parity().at(r, t);

        std::vector<std::pair<Word, Branch>> pending;
        for (std::uint32_t sid = 0; sid < tr.state_syndromes_[t].size(); ++sid) {
            const Word& s = tr.state_syndromes_[t][sid];
            for (int a = 0; a < q; ++a) {
                Word s2(m);
                for (std::size_t r = 0; r < m; ++r)
                    s2[r] = static_cast<std::uint8_t>(f.add(s[r], f.mul(a, h[r])));
                if (!co_reachable.member(s2, t + 1)) continue;
                pending.emplace_back(std::move(s2), Branch{sid, static_cast<std::uint8_t>(a), 0});
            }
        }

        // dense ids in sorted syndrome order, for deterministic structure
        std::map<Word, std::uint32_t> next_ids;
        for (auto& [s2, br] : pending) next_ids.try_emplace(s2, 0);
        std::uint32_t id = 0;
        tr.state_syndromes_[t + 1].reserve(next_ids.size());
        for (auto& [s2, sid] : next_ids) {
            sid = id++;
            tr.state_syndromes_[t + 1].push_back(s2);
        }
        auto& branches = tr.sections_[t].branches;
        branches.reserve(pending.size());
        for (auto& [s2, br] : pending) {
            br.to = next_ids[s2];
            branches.push_back(br);
        }
        std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
            return a.from != b.from ? a.from < b.from : a.label < b.label;
        });
    }

    if (tr.state_syndromes_[n].size() != 1)
        throw std::logic_error("trellis: final state space is not {0}");
    return tr;
}

TrellisProfile Trellis::profile() const {
    TrellisProfile p;
    p.total_branches = 0;
    p.max_states = 0;
    for (const auto& states : state_syndromes_) {
        p.state_counts.push_back(states.size());
        p.max_states = std::max(p.max_states, states.size());
    }
    for (const auto& sec : sections_) {
        p.branch_counts.push_back(sec.branches.size());
        p.total_branches += sec.branches.size();
    }
    return p;
}

std::uint64_t Trellis::path_count() const {
    std::vector<std::uint64_t> alpha{1};
    for (std::size_t t = 0; t < num_stages(); ++t) {
        std::vector<std::uint64_t> next(state_count(t + 1), 0);
        for (const Branch& b : sections_[t].branches)
            next[b.to] = checked_add(next[b.to], alpha[b.from]);
        alpha = std::move(next);
    }
    return alpha.at(0);
}

Word Trellis::codeword_labels(const Word& c) const {
    if (c.size() != code_.n())
        throw std::invalid_argument("codeword_labels: wrong length");
    if (!code_.contains(c))
        throw std::invalid_argument("codeword_labels: input fails the parity check");
    return c;   // n_t = 1: labels are the symbols
}

}  // namespace geospec
