#pragma once

#include <string>

#include <json.hpp>

#include "qsd/nosignal.hpp"
#include "qsd/optimal.hpp"

namespace qsd {

using nlohmann::json;

json ensemble_to_json(const SymmetricEnsemble& e);
SymmetricEnsemble ensemble_from_json(const json& j);

/// Emits {N, profile} for circulant merits, {N, matrix} otherwise; the
/// parser accepts both.
json merit_to_json(const FigureOfMerit& f);
FigureOfMerit merit_from_json(const json& j);

/// N rows x N columns, row = input index, 17 significant digits.
std::string channel_to_csv(const ChannelMatrix& c);
ChannelMatrix channel_from_csv(const std::string& text);

json channel_to_json(const ChannelMatrix& c);
ChannelMatrix channel_from_json(const json& j);

/// Effects as 2x2 arrays of [re, im] pairs.
json povm_to_json(const Povm& p);
Povm povm_from_json(const json& j);

json fit_to_json(const CosineFit& f);
json bound_to_json(const BoundReport& b);
json region_to_json(const AdmissibleRegion& r);
json score_to_json(const ScoreReport& s);
json optimization_to_json(const OptimizationResult& r);

/// printf %.17g formatting, round-trip exact for doubles.
std::string format_double(double v);

}  // namespace qsd
