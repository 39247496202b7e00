#ifndef OSCREP_TESTS_LABELS_HPP
#define OSCREP_TESTS_LABELS_HPP

#include "oracle/oracle.hpp"
#include "oscrep/orth_lie.hpp"

inline oracle::Label to_oracle(const oscrep::BasisLabel& l) {
  const char f = l.family == oscrep::Family::A ? 'A' : l.family == oscrep::Family::B ? 'B'
                                                   : l.family == oscrep::Family::C   ? 'C'
                                                                                     : 'K';
  return {f, l.i, l.j};
}

inline oscrep::BasisLabel from_oracle(const oracle::Label& l) {
  const auto f = l.f == 'A' ? oscrep::Family::A : l.f == 'B' ? oscrep::Family::B
                                                : l.f == 'C'   ? oscrep::Family::C
                                                               : oscrep::Family::K;
  return {f, l.i, l.j};
}

inline oracle::Algebra to_oracle(const oscrep::LieAlgebraSpec& spec) {
  return {spec.parity == oscrep::Parity::Odd, spec.n};
}

#endif
