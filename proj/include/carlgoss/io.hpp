#pragma once

#include <string>

#include "json.hpp"

#include "carlgoss/invariants.hpp"
#include "carlgoss/laurent.hpp"
#include "carlgoss/sinnott.hpp"

namespace carlgoss {

using json = nlohmann::json;

// Canonical shapes. Polynomials are little-endian code arrays; precision is
// always spelled out; group-ring terms are emitted sparse in ascending index
// order. Every emitter has a parser that reproduces the value bit for bit.

json poly_json(const Poly& a);
Poly poly_from_json(const Fq* F, const json& j);

json padic_json(const PadicElem& a);
PadicElem padic_from_json(const PrimeCtx* P, const json& j);

json zp_json(const ZpApprox& y);
ZpApprox zp_from_json(const json& j);

json laurent_json(const LaurentElem& x);
LaurentElem laurent_from_json(const Fq* F, const json& j);

json groupring_json(const GroupRingElem& g);
GroupRingElem groupring_from_json(const GammaLevel* G, const json& j);

json theta_json(const ThetaSeries& th);
json dirfunction_json(const DirFunction& f);
json lseries_json(const std::vector<PadicElem>& c);
json minvariant_json(const MInvariant& mi);

// sorted keys, two-space indent, trailing newline
std::string dump_canonical(const json& j);

}  // namespace carlgoss
