#ifndef CTSEQ_MORPHISM_HPP
#define CTSEQ_MORPHISM_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ctseq/linrep.hpp"

namespace ctseq {

  using LetterId = std::uint32_t;

  // Interned state vectors with memoized gamma transitions. Ids are handed
  // out in discovery order.
  class LetterTable {
  public:
    explicit LetterTable(const LinRep& rep);

    LetterId intern(const StateVector& v);
    LetterId successor(LetterId id, unsigned digit);
    const StateVector& letter(LetterId id) const { return letters_[id]; }
    std::size_t size() const { return letters_.size(); }
    const LinRep& rep() const { return *rep_; }

  private:
    static constexpr LetterId kUnknown = UINT32_MAX;
    const LinRep* rep_;
    std::vector<StateVector> letters_;
    std::unordered_map<StateVector, LetterId, StateVectorHash> ids_;
    std::vector<LetterId> next_;  // p slots per letter
  };

  // (gamma(0) u, gamma(1) u, ..., gamma(p-1) u)
  std::vector<StateVector> sigma_image(const LinRep& rep, const StateVector& u);

  // Prefix of the fixed point V(0) V(1) V(2) ... of sigma. The LinRep must
  // outlive the stream.
  class MorphicStream {
  public:
    explicit MorphicStream(const LinRep& rep);

    // Grows the prefix to at least n letters, expanding letter j into
    // positions p j .. p j + p - 1.
    void extend(std::uint64_t n);

    std::uint64_t size() const { return ids_.size(); }
    LetterId id_at(std::uint64_t n) const { return ids_[n]; }
    const StateVector& at(std::uint64_t n) const { return table_.letter(ids_[n]); }
    const std::vector<LetterId>& ids() const { return ids_; }
    const LetterTable& table() const { return table_; }
    const LinRep& rep() const { return table_.rep(); }

  private:
    LetterTable table_;
    std::vector<LetterId> ids_;
  };

  // n -> row . V(n) for n < count; the stream must already hold count letters.
  std::vector<Scalar> coded_prefix(const MorphicStream& stream, const RowVector& row,
                                   std::uint64_t count);

} // namespace ctseq

#endif // CTSEQ_MORPHISM_HPP
