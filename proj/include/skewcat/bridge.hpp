#pragma once

#include <vector>

#include "skewcat/catcalc.hpp"
#include "skewcat/focused.hpp"
#include "skewcat/formula.hpp"
#include "skewcat/seqcalc.hpp"

namespace skew {

// f : S | G --> C  gives  [[S | G]] ==> C.
CatDeriv sound(const SeqDeriv& f, const Flags& flags);

// f : A ==> C  gives  A | --> C.
SeqDeriv cmplt(const CatDeriv& f, const Flags& flags);
// f : [[S | G]] ==> C  gives  S | G --> C.
SeqDeriv cmplt(const CatDeriv& f, const Stoup& s, const Context& g, const Flags& flags);

// One representative per equality class of maps a ==> c, in search order.
std::vector<CatDeriv> hom_enumerate(const Flags& flags, const Formula& a, const Formula& c,
                                    const SearchOptions& opts = {});

}  // namespace skew
