#pragma once

#include "json.hpp"

#include "cyclo/crystal.hpp"
#include "cyclo/ideals.hpp"
#include "cyclo/multipartition.hpp"
#include "cyclo/params.hpp"
#include "cyclo/quiver.hpp"
#include "cyclo/rational.hpp"
#include "cyclo/scalar.hpp"

namespace cyclo {

using ojson = nlohmann::ordered_json;

ojson rational_json(const Rational& r);  // "p/q" string form
Rational rational_from_json(const ojson& j);

ojson scalar_json(const ExactScalar& x);
ExactScalar scalar_from_json(const ojson& j);

ojson box_json(const Box& b);
Box box_from_json(const ojson& j);

ojson multipartition_json(const MultiPartition& mp);
MultiPartition multipartition_from_json(const ojson& j);

ojson hyperplane_json(const HyperplaneParams& hp);
HyperplaneParams hyperplane_from_json(const ojson& j);

ojson quiver_json(const QuiverData& q);
ojson dim_vector_json(const DimVector& v, const QuiverData& q);

ojson fock_json(const FockVector& v);

ojson chain_json(const IdealChain& chain);

}  // namespace cyclo
