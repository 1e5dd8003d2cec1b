#pragma once

#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ursa/pairing.hpp"

namespace ursa {

// Torus-free element of U(n) with integer-Laurent coefficients, words interned.
using ZElem = std::vector<std::pair<int32_t, LaurentZ>>;  // sorted by word id

// PBW monomial: exponents over root ids, kept sorted by descending word-lex
// position of the root (the order the factors appear in the product).
using PBWMono = std::vector<std::pair<int32_t, int32_t>>;  // (root id, exponent)

// A quantum root vector: good Lyndon word plus expanded E- and F-forms.
struct RootVector {
    LatticeVec root;
    Word word;
    int32_t part1 = -1, part2 = -1;  // std factorization parts (root ids), -1 for simple
    Mono2 bracket_constant;          // <w'_{part1}, w_{part2}> used in c_beta
    ZElem e_expansion, f_expansion;  // coefficients are +/- monomials
};

struct LSRelation {
    int32_t a = 0, b = 0;                  // root ids, word(a) < word(b)
    RatFn scalar;                          // <w'_{beta_b}, w_{beta_a}>
    std::vector<std::pair<PBWMono, RatFn>> expansion;
    LatticeVec weight;
    long gram_size = 0;      // number of PBW monomials of the weight
    long interval_size = 0;  // candidate monomials strictly inside (a,b)
    bool residual_ok = false;
    bool convexity_ok = false;
};

struct NormalFormResult {
    std::vector<std::pair<PBWMono, RatFn>> expansion;  // sorted by monomial key
    bool residual_ok = false;
};

// The construction engine: good Lyndon words, root vectors, the convex PBW
// basis, pairing sweeps against F-side PBW monomials, normal forms and the
// straightening table.
class Engine {
  public:
    Engine(const RootDatum& rd, int threads = 1);

    const RootDatum& root_datum() const { return rd_; }
    Pairing& pairing() const { return pairing_; }

    // ---- words and interning ----
    int32_t intern(const Word& w);
    const Word& word_of(int32_t id) const;

    // ---- good words / root vectors (built inductively on construction) ----
    int num_roots() const { return int(rv_.size()); }
    const RootVector& rv(int32_t id) const { return rv_[size_t(id)]; }
    int32_t root_id(const LatticeVec& root) const;  // -1 if absent
    // ids sorted by lexicographic order of good words (the convex order)
    const std::vector<int32_t>& convex_order() const { return convex_; }
    // good words with their roots, sorted lexicographically
    std::vector<std::pair<LatticeVec, Word>> good_lyndon_words() const;

    BElement e_element(int32_t id) const;  // expanded E_beta as BElement
    BElement f_element(int32_t id) const;
    BElement mono_e_element(const PBWMono& m) const;
    BElement mono_f_element(const PBWMono& m) const;
    ZElem mono_e_zelem(const PBWMono& m) const;
    ZElem mono_f_zelem(const PBWMono& m) const;

    // ---- c_beta and diagonal values ----
    const RatFn& c_beta(int32_t id) const { return c_beta_[size_t(id)]; }
    // d_m = prod_i Psi_{n_i}(rs^{-1}) / ((1-rs^{-1}) c_{beta_i})^{n_i}
    RatFn d_value(const PBWMono& m) const;

    // ---- monomials ----
    std::vector<PBWMono> pbw_monomials(const LatticeVec& weight) const;
    LatticeVec mono_weight(const PBWMono& m) const;
    Word mono_word(const PBWMono& m) const;  // concatenated good letters
    int mono_height(const PBWMono& m) const;

    // ---- engine pairing sweeps ----
    // Computes (s-r)^{h} <F_m, x> for every PBW monomial m of the weight,
    // by peeling root-vector factors through the coproduct. Only monomials
    // with nonzero value are reported.
    std::vector<std::pair<PBWMono, LaurentZ>> sweep_all(const ZElem& x,
                                                        const LatticeVec& weight) const;

    // Honest column check: sweeps E_m and verifies <F_{m'}, E_m> is diagonal
    // with value d_m. Cached per monomial. Returns false (and records a
    // witness) if diagonality fails.
    bool verify_column(const PBWMono& m, std::string* witness = nullptr) const;

    // ---- normal form (unique PBW expansion in the quotient) ----
    NormalFormResult normal_form(const BElement& x) const;
    NormalFormResult normal_form_z(const ZElem& x, const RatFn& scale,
                                   const LatticeVec& weight) const;
    bool is_zero_in_quotient(const BElement& x) const;

    // F-side normal form over the F-PBW monomials, via the word-level pairing
    // against E-monomials; desk scale (the honest Gram of the weight is
    // verified diagonal once and cached)
    NormalFormResult f_normal_form(const BElement& x) const;

    // ---- straightening table ----
    // Relations for every pair a < b (convex order) whose weight height is
    // within bounds: root sums up to max_height, non-root sums up to
    // nonroot_cap.
    std::vector<LSRelation> ls_table(int max_height, int nonroot_cap) const;
    LSRelation ls_relation(int32_t a, int32_t b) const;

    // (s-r)^h <F_beta, e_v> for the root vector of id, v interned; the
    // building block of every sweep
    const LaurentZ& phi_hat(int32_t id, int32_t wordid) const;

    ZElem to_zelem(const BElement& x, RatFn& scale) const;

    int threads() const { return threads_; }
    void set_threads(int t) { threads_ = t > 0 ? t : 1; }

  private:
    const RootDatum rd_;  // owned copy: the engine must outlive any caller datum
    mutable Pairing pairing_;
    int threads_ = 1;

    // word pool (deque keeps references stable)
    mutable std::deque<Word> pool_;
    struct WordHash {
        size_t operator()(const Word& w) const {
            size_t h = 1469598103934665603ull;
            for (int x : w) h = (h ^ size_t(uint32_t(x))) * 1099511628211ull;
            return h;
        }
    };
    mutable std::unordered_map<Word, int32_t, WordHash> pool_idx_;
    mutable std::mutex pool_mu_;

    std::vector<RootVector> rv_;
    std::map<LatticeVec, int32_t> root_ids_;
    std::vector<int32_t> convex_;  // root ids sorted by word lex
    std::vector<RatFn> c_beta_;

    mutable std::unordered_map<uint64_t, LaurentZ> phi_memo_;
    mutable std::mutex phi_mu_;

    mutable std::map<PBWMono, RatFn> dval_memo_;
    mutable std::mutex dval_mu_;

    struct ColumnState { bool verified = false; std::string witness; };
    mutable std::map<PBWMono, ColumnState> column_memo_;
    mutable std::mutex column_mu_;

    mutable std::map<LatticeVec, bool> fgram_memo_;  // honest F-Gram diagonality
    mutable std::mutex fgram_mu_;

    // feasibility of writing `rem` as a sum of roots whose convex position is
    // <= k (positions into convex_)
    bool feasible(const LatticeVec& rem, int k) const;
    mutable std::unordered_map<uint64_t, bool> feas_memo_;
    mutable std::mutex feas_mu_;

    void build();
    void add_root_vector(const LatticeVec& root, const Word& w);

    // phi-hat of a bracket [F_{p1}, F_{p2}] evaluated on word v (generic in
    // the parts; used both for official roots and for candidate tests)
    LaurentZ phi_bracket(int32_t p1, int32_t p2, const Word& v) const;

    LaurentZ sweep_value(const PBWMono& m, const ZElem& x) const;
    ZElem apply_d(int32_t rootid, const ZElem& x) const;

    void sweep_rec(int pos, const LatticeVec& rem, const ZElem& cur,
                   std::vector<std::pair<int32_t, int32_t>>& stack,
                   const std::function<void(const PBWMono&, const LaurentZ&)>& cb) const;
};

std::string mono_str(const Engine& eng, const PBWMono& m);

}  // namespace ursa
