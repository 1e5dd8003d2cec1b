#pragma once

#include <mutex>
#include <unordered_map>

#include "ursa/balgebra.hpp"

namespace ursa {

// The skew-dual Hopf pairing <.,.> : B' x B -> Q(r,s), computed by peeling
// the leftmost f-letter through the coproduct of the second argument.
//
// For pure words the value is P(u,v) / (s-r)^{|u|} where P is an integer
// Laurent polynomial accumulated over letter matchings; torus decorations
// contribute a single factor <w'_nu, w_mu> at the end.
class Pairing {
  public:
    explicit Pairing(const RootDatum& rd) : rd_(rd) {}

    const RootDatum& root_datum() const { return rd_; }

    // (s-r)^{|u|} <f_u, e_v>; zero unless contents match
    LaurentZ phat(const Word& fword, const Word& eword) const;

    RatFn pair_words(const Word& fword, const Word& eword) const;

    // full bilinear pairing of an F-side element against an E-side element
    RatFn pair(const BElement& y, const BElement& x) const;

    // G[m][n] = pair(fbasis[m], ebasis[n]); all elements homogeneous of weight
    std::vector<std::vector<RatFn>> gram(const LatticeVec& weight,
                                         const std::vector<BElement>& fbasis,
                                         const std::vector<BElement>& ebasis) const;

    // vector of pairings of x against each element of fbasis
    std::vector<RatFn> functional_vector(const BElement& x,
                                         const std::vector<BElement>& fbasis) const;

    const LaurentBi& smr_pow(int n) const;  // (s-r)^n

    // optional persistent memo; versioned so convention changes invalidate it
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;
    size_t memo_size() const;

  private:
    const RootDatum& rd_;
    struct WordPairHash {
        size_t operator()(const std::pair<Word, Word>& p) const;
    };
    mutable std::unordered_map<std::pair<Word, Word>, LaurentZ, WordPairHash> memo_;
    mutable std::mutex mu_;
    mutable std::vector<LaurentBi> smr_pows_;
    mutable std::mutex smr_mu_;
};

}  // namespace ursa
