// SPDX-License-Identifier: MIT
//
// JSON encodings of the library's result types and plain-text renderings of
// the verification reports.  Shared by the command-line tool and the Python
// extension so that both emit identical records.

#pragma once

#include <string>

#include <json.hpp>

#include "twobridge/classify.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/paths.hpp"

namespace twobridge {

// Version of the record layout described by schema/output.schema.json.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const LinkParams& lp);
nlohmann::json to_json(const EdgePath& path);
nlohmann::json to_json(const CatalogEntry& entry, const EdgePath* path);
nlohmann::json to_json(const SurfaceData& data);
nlohmann::json to_json(const GenusZeroSolution& s);
nlohmann::json to_json(const ReducibleSurgery& r);
nlohmann::json to_json(const SurgeryClassification& c);
nlohmann::json to_json(const TorusKnotSurgery& t);
nlohmann::json to_json(const SatelliteResult& s);
nlohmann::json to_json(const AllBInvariants& b);
nlohmann::json to_json(const GenusZeroReport& r);
nlohmann::json to_json(const ClosedFormReport& r);
nlohmann::json to_json(const SymmetryReport& r);

// Catalog of every regime for (r, s), with edge lists of the minimal paths.
nlohmann::json catalog_json(i64 r, i64 s);

std::string to_text(const GenusZeroReport& r);
std::string to_text(const ClosedFormReport& r);
std::string to_text(const SymmetryReport& r);

}  // namespace twobridge
