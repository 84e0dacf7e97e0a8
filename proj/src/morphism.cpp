#include "ctseq/morphism.hpp"

namespace ctseq {

  LetterTable::LetterTable(const LinRep& rep) : rep_(&rep)
  {
    intern(rep.v0());
  }

  LetterId LetterTable::intern(const StateVector& v)
  {
    auto it = ids_.find(v);
    if (it != ids_.end())
      return it->second;
    if (letters_.size() >= rep_->limits().state_cap)
      throw ResourceError("distinct state vectors exceed the state cap");
    const auto id = static_cast<LetterId>(letters_.size());
    letters_.push_back(v);
    ids_.emplace(v, id);
    next_.resize(next_.size() + rep_->prime(), kUnknown);
    return id;
  }

  LetterId LetterTable::successor(LetterId id, unsigned digit)
  {
    const std::size_t slot = static_cast<std::size_t>(id) * rep_->prime() + digit;
    if (next_[slot] == kUnknown) {
      const LetterId target = intern(rep_->apply(digit, letters_[id]));
      next_[slot] = target;
    }
    return next_[slot];
  }

  std::vector<StateVector> sigma_image(const LinRep& rep, const StateVector& u)
  {
    if (u.size() != rep.index_set().size())
      throw ArgumentError("state vector does not match the window");
    std::vector<StateVector> word;
    word.reserve(rep.prime());
    for (std::uint64_t k = 0; k < rep.prime(); ++k)
      word.push_back(rep.apply(k, u));
    return word;
  }

  MorphicStream::MorphicStream(const LinRep& rep) : table_(rep)
  {
    ids_.push_back(0);
  }

  void MorphicStream::extend(std::uint64_t n)
  {
    if (n > rep().limits().stream_cap)
      throw ResourceError("requested prefix exceeds the stream cap");
    if (n <= ids_.size())
      return;
    const std::uint64_t p = rep().prime();
    ids_.reserve(n);
    // alpha[i] = gamma(i mod p) alpha[i / p]; blocks of p fill in index order.
    for (std::uint64_t i = ids_.size(); i < n; ++i)
      ids_.push_back(table_.successor(ids_[i / p], static_cast<unsigned>(i % p)));
  }

  std::vector<Scalar> coded_prefix(const MorphicStream& stream, const RowVector& row,
                                   std::uint64_t count)
  {
    if (count > stream.size())
      throw ArgumentError("stream prefix is shorter than the requested count");
    const LinRep& rep = stream.rep();
    if (row.size() != rep.index_set().size())
      throw ArgumentError("row length does not match the window");
    // Code each distinct letter once.
    std::vector<Scalar> coded(stream.table().size());
    for (std::size_t id = 0; id < coded.size(); ++id)
      coded[id] = rep.code(row, stream.table().letter(static_cast<LetterId>(id)));
    std::vector<Scalar> out(count);
    for (std::uint64_t n = 0; n < count; ++n)
      out[n] = coded[stream.id_at(n)];
    return out;
  }

} // namespace ctseq
