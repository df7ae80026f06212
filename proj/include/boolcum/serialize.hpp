#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>

#include "boolcum/boolean_model.hpp"
#include "boolcum/interval_partition.hpp"
#include "boolcum/matrix.hpp"
#include "boolcum/multilinear.hpp"
#include "boolcum/operator_valued.hpp"
#include "boolcum/scalar.hpp"
#include "boolcum/scalar_boolean.hpp"
#include "boolcum/series.hpp"

// JSON encodings. Scalars are "p/q" strings ("p" when q = 1); matrices are
// row-major nested arrays of scalars; multilinear tables are objects keyed by
// basis tuples "i,j;k,l;..." (0-based matrix-unit indices, "" for arity 0).
// Every *_from_json reports malformed input as ParseError.
namespace boolcum::io {

using nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const MatrixB& m);
MatrixB matrix_from_json(const json& j);

/// {"order": N, "coeffs": [...]}
json to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const json& j);

/// [2, 1, 1]
json to_json(const IntervalPartition& gamma);
IntervalPartition partition_from_json(const json& j);

/// {"order": N, "moments": [...]}
json to_json(const MomentSeq& m);
MomentSeq moments_from_json(const json& j);

/// {"order": N, "cumulants": [...]}
json to_json(const CumulantSeq& b);
CumulantSeq cumulants_from_json(const json& j);

/// {"terms": {"XY": "1/2", "": "1"}}
json to_json(const AlgElement& a);
AlgElement alg_element_from_json(const json& j);

/// {"X": moments, "Y": moments}
json to_json(const JointState& s);
JointState joint_state_from_json(const json& j);

/// {"arity": n, "table": {...}}. Missing table keys read as zero matrices.
json to_json(const MultilinearMap& f);
MultilinearMap multilinear_from_json(const json& j, std::size_t dim);

/// {"dim": d, "order": N, "moments": [{"arity": n - 1, "table": ...}, ...]}
json to_json(const OVDistribution& d);
OVDistribution ov_distribution_from_json(const json& j);

/// {"dim": d, "order": N, "components": [{"arity": k, "table": ...}, ...]}
json to_json(const MulSeries& f);
MulSeries mulseries_from_json(const json& j);

/// {"X": distribution, "Y": distribution}
json to_json(const OVJointState& s);
OVJointState ov_joint_state_from_json(const json& j);

/// "i,j;k,l" for a tuple of basis indices of a d x d matrix algebra.
std::string basis_key(const MultilinearMap& f, std::size_t flat);

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_text(const std::string& text);

}  // namespace boolcum::io
