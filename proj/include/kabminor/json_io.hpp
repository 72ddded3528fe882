#pragma once

#include <json.hpp>

#include "kabminor/extremal.hpp"
#include "kabminor/graph.hpp"
#include "kabminor/minors.hpp"
#include "kabminor/spectral.hpp"

namespace kabminor {

/// graph6, order, size, degree sequence and connectivity.
nlohmann::json graph_summary(const Graph& g);
/// Row-major nested arrays.
nlohmann::json to_json(const DenseMatrix& m);
nlohmann::json to_json(const SpectralResult& r, bool with_vector = true);
nlohmann::json to_json(const QuotientMatrix& q);
nlohmann::json to_json(const MinorWitness& w);
nlohmann::json to_json(const AbPropertyReport& r);
nlohmann::json to_json(const ExtremalPrediction& p);
nlohmann::json to_json(const PerronStats& s);

}  // namespace kabminor
