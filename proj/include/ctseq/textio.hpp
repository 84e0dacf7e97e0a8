#ifndef CTSEQ_TEXTIO_HPP
#define CTSEQ_TEXTIO_HPP

#include <string>

#include "ctseq/classify.hpp"
#include "ctseq/pipeline.hpp"

namespace ctseq {

  // Fixed key order; undecided booleans print as null.
  std::string verdict_json(const Verdict& v);
  std::string verdict_text(const Verdict& v);

  std::string frequency_text(const Rational& f);
  std::string gap_text(const GapReport& g);
  std::string conjecture_text(const ConjectureReport& r);
  std::string oracle_check_text(const OracleCheck& c);

  std::string status_name(Status s);

} // namespace ctseq

#endif // CTSEQ_TEXTIO_HPP
