#include "ctseq/dfao.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "ctseq/morphism.hpp"
#include "ctseq/polytext.hpp"

namespace ctseq {

  namespace {

    std::string canonical_key(const LaurentPoly& q)
    {
      std::string key;
      key.reserve(q.term_count() * (q.variable_count() + 2) * 4);
      auto put = [&key](std::int64_t v) {
        key.append(reinterpret_cast<const char*>(&v), sizeof v);
      };
      for (std::size_t t = 0; t < q.term_count(); ++t) {
        for (Exponent e : q.exponent(t))
          put(e);
        put(q.coefficient(t));
      }
      return key;
    }

    std::uint64_t ipow(std::uint64_t b, unsigned e)
    {
      std::uint64_t r = 1;
      while (e--)
        r *= b;
      return r;
    }

    std::string digit_label(std::uint64_t k, unsigned level, std::uint64_t p)
    {
      std::string s = "prefix:";
      for (unsigned i = 0; i < level; ++i) {
        if (i)
          s += ',';
        s += std::to_string(k % p);
        k /= p;
      }
      return s;
    }

    constexpr std::uint32_t kUnexpanded = UINT32_MAX;

  } // namespace

  Dfao build_forward(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime,
                     Ring ring, const Limits& limits)
  {
    const LaurentPoly seeds[] = {q};
    return build_forward_staged(p, seeds, 0, prime, ring, limits);
  }

  ForwardMachine::ForwardMachine(const LaurentPoly& p, std::span<const LaurentPoly> seeds,
                                 unsigned depth, std::uint64_t prime, Ring ring,
                                 const Limits& limits)
    : p_(prime), depth_(depth), ring_(ring), limits_(limits)
  {
    if (!ring.is_modular())
      throw ArgumentError("automata need a modular ring");
    if (prime > limits.prime_cap)
      throw ResourceError("prime exceeds the materialization cap");
    if (seeds.size() != ipow(prime, depth))
      throw ArgumentError("staged automaton needs p^depth seeds");

    seeds_.assign(seeds.begin(), seeds.end());
    const LaurentPoly pr = p.ring() == ring ? p : p.reduced(ring);
    powers_.reserve(prime);
    powers_.push_back(LaurentPoly::constant(pr.variable_count(), 1, ring));
    for (std::uint64_t k = 1; k < prime; ++k)
      powers_.push_back(mul(powers_.back(), pr, limits.term_guard));

    d_.direction = Direction::forward;
    d_.base = prime;
    d_.ring = ring;
    d_.initial = 0;
    // Prefix nodes for the first `depth` digits, then polynomial states.
    if (depth == 0)
      poly_state(seed(0));
    else
      prefix_state(0, 0);
  }

  LaurentPoly ForwardMachine::seed(std::uint64_t k) const
  {
    return seeds_[k].ring() == ring_ ? seeds_[k] : seeds_[k].reduced(ring_);
  }

  std::uint32_t ForwardMachine::add_state(Node n, std::string label, Scalar out)
  {
    if (nodes_.size() >= limits_.state_cap)
      throw ResourceError("automaton exceeds the state cap");
    nodes_.push_back(n);
    d_.labels.push_back(std::move(label));
    d_.outputs.push_back(out);
    d_.transitions.resize(nodes_.size() * p_, kUnexpanded);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::uint32_t ForwardMachine::poly_state(LaurentPoly q)
  {
    std::string key = canonical_key(q);
    auto it = poly_ids_.find(key);
    if (it != poly_ids_.end())
      return it->second;
    const Scalar out = q.constant_term();
    std::string label = format_poly(q);
    polys_.push_back(std::move(q));
    const auto id = add_state(Node{false, 0, 0, polys_.size() - 1}, std::move(label), out);
    poly_ids_.emplace(std::move(key), id);
    return id;
  }

  std::uint32_t ForwardMachine::prefix_state(unsigned level, std::uint64_t value)
  {
    const std::uint64_t key = (static_cast<std::uint64_t>(level) << 40) | value;
    auto it = prefix_ids_.find(key);
    if (it != prefix_ids_.end())
      return it->second;
    const Scalar out = seed(value).constant_term();
    const auto id = add_state(Node{true, level, value, 0}, digit_label(value, level, p_), out);
    prefix_ids_.emplace(key, id);
    return id;
  }

  std::uint32_t ForwardMachine::next(std::uint32_t state, unsigned digit)
  {
    const std::size_t slot = static_cast<std::size_t>(state) * p_ + digit;
    if (d_.transitions[slot] != kUnexpanded)
      return d_.transitions[slot];
    const Node node = nodes_[state];
    std::uint32_t target;
    if (node.prefix) {
      const std::uint64_t v = node.value + digit * ipow(p_, node.level);
      target = node.level + 1 < depth_ ? prefix_state(node.level + 1, v) : poly_state(seed(v));
    } else {
      LaurentPoly next = lambda_mul(powers_[digit], polys_[node.poly],
                                    static_cast<std::int64_t>(p_), limits_.term_guard);
      target = poly_state(std::move(next));
    }
    d_.transitions[slot] = target;
    return target;
  }

  Scalar ForwardMachine::run(std::uint64_t n)
  {
    std::uint32_t state = initial();
    for (unsigned k : digits_lsd(n, p_))
      state = next(state, k);
    return output(state);
  }

  Dfao ForwardMachine::complete()
  {
    for (std::size_t s = 0; s < nodes_.size(); ++s) {
      for (unsigned k = 0; k < p_; ++k)
        next(static_cast<std::uint32_t>(s), k);
    }
    return d_;
  }

  Dfao build_forward_staged(const LaurentPoly& p, std::span<const LaurentPoly> seeds,
                            unsigned depth, std::uint64_t prime, Ring ring,
                            const Limits& limits)
  {
    return ForwardMachine(p, seeds, depth, prime, ring, limits).complete();
  }

  Scalar ReverseMachine::run(std::uint64_t n, const RowVector* row)
  {
    const auto digits = digits_lsd(n, table_.rep().prime());
    LetterId state = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
      state = table_.successor(state, *it);
    const StateVector& v = table_.letter(state);
    if (!row)
      return v.constant_entry();
    return table_.rep().code(*row, v);
  }

  Dfao build_reverse(const LinRep& rep)
  {
    rep.materialize_all();
    LetterTable table(rep);
    const std::uint64_t p = rep.prime();
    Dfao d;
    d.direction = Direction::reverse;
    d.base = p;
    d.ring = rep.ring();
    d.initial = 0;
    for (std::size_t s = 0; s < table.size(); ++s) {
      for (unsigned k = 0; k < p; ++k)
        d.transitions.push_back(table.successor(static_cast<LetterId>(s), k));
    }
    d.vectors.reserve(table.size());
    for (std::size_t s = 0; s < table.size(); ++s) {
      const StateVector& v = table.letter(static_cast<LetterId>(s));
      std::string label = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
          label += ',';
        label += std::to_string(v[i]);
      }
      label += ')';
      d.labels.push_back(std::move(label));
      d.outputs.push_back(v.constant_entry());
      d.vectors.push_back(v);
    }
    return d;
  }

  Scalar run(const Dfao& d, std::uint64_t n, const RowVector* row)
  {
    const auto digits = digits_lsd(n, d.base);
    std::uint32_t state = d.initial;
    if (d.direction == Direction::forward) {
      for (unsigned k : digits)
        state = d.next(state, k);
      return d.outputs[state];
    }
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
      state = d.next(state, *it);
    if (!row)
      return d.outputs[state];
    const StateVector& v = d.vectors[state];
    if (row->size() != v.size())
      throw ArgumentError("row length does not match the state vectors");
    Scalar acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      acc = d.ring.add(acc, d.ring.mul((*row)[i], v[i]));
    return acc;
  }

  ExportFormat parse_export_format(const std::string& tag)
  {
    if (tag == "dot")
      return ExportFormat::dot;
    if (tag == "walnut")
      return ExportFormat::walnut;
    throw ArgumentError("unknown export format '" + tag + "'");
  }

  std::string export_dfao(const Dfao& d, ExportFormat format)
  {
    std::ostringstream out;
    if (format == ExportFormat::walnut) {
      out << (d.direction == Direction::forward ? "lsd_" : "msd_") << d.base << '\n';
      for (std::size_t s = 0; s < d.state_count(); ++s) {
        if (s)
          out << '\n';
        out << s << ' ' << d.outputs[s] << '\n';
        for (unsigned k = 0; k < d.base; ++k)
          out << k << " -> " << d.next(static_cast<std::uint32_t>(s), k) << '\n';
      }
    } else {
      out << "digraph dfao {\n";
      out << "  rankdir=LR;\n";
      for (std::size_t s = 0; s < d.state_count(); ++s) {
        out << "  n" << s << " [label=\"" << s << '/' << d.outputs[s] << "\""
            << (s == d.initial ? ", shape=doublecircle" : ", shape=circle") << "];\n";
      }
      for (std::size_t s = 0; s < d.state_count(); ++s) {
        for (unsigned k = 0; k < d.base; ++k) {
          out << "  n" << s << " -> n" << d.next(static_cast<std::uint32_t>(s), k)
              << " [label=\"" << k << "\"];\n";
        }
      }
      out << "}\n";
    }
    return out.str();
  }

} // namespace ctseq
