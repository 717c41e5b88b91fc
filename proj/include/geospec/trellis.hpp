// Syndrome trellis of a linear code: one symbol per stage, states are the
// partial syndromes that are both reachable and co-reachable.
#ifndef GEOSPEC_TRELLIS_HPP
#define GEOSPEC_TRELLIS_HPP

#include <cstdint>
#include <vector>

#include "geospec/code.hpp"

namespace geospec {

struct Branch {
    std::uint32_t from;    // state id in S_t
    std::uint8_t label;    // single field element
    std::uint32_t to;      // state id in S_{t+1}
};

struct TrellisSection {
    std::vector<Branch> branches;
};

struct TrellisProfile {
    std::vector<std::size_t> state_counts;    // |S_0| .. |S_n|
    std::vector<std::size_t> branch_counts;   // per section
    std::size_t total_branches;
    std::size_t max_states;
};

class Trellis {
public:
    static Trellis build(const LinearCode& code);

    const LinearCode& code() const { return code_; }
    std::size_t num_stages() const { return sections_.size(); }   // = n
    const TrellisSection& section(std::size_t t) const { return sections_[t]; }
    std::size_t state_count(std::size_t t) const { return state_syndromes_[t].size(); }
    const std::vector<Word>& states(std::size_t t) const { return state_syndromes_[t]; }

    TrellisProfile profile() const;

    /// Number of start-to-end paths, by exact DP; equals q^k.
    std::uint64_t path_count() const;

    /// Branch labels along the codeword's path (with one symbol per stage these
    /// are the symbols themselves). Throws if `c` fails the parity check.
    Word codeword_labels(const Word& c) const;

private:
    Trellis(LinearCode code) : code_(std::move(code)) {}
    LinearCode code_;
    std::vector<std::vector<Word>> state_syndromes_;   // per stage, sorted
    std::vector<TrellisSection> sections_;
};

inline Trellis build_syndrome_trellis(const LinearCode& code) { return Trellis::build(code); }

}  // namespace geospec

#endif
