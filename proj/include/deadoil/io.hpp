#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "deadoil/coefficients.hpp"
#include "deadoil/control.hpp"
#include "deadoil/mesh.hpp"
#include "deadoil/objective.hpp"
#include "deadoil/optimizer.hpp"

namespace deadoil {

/// Field CSV: header `t,x,y,value`, one row per interior node, time level
/// major then row-major nodes (x fastest), every number with 17 significant
/// digits so binary64 values round-trip exactly.
void write_field_csv(std::ostream& out, const SpaceTimeField& field);
void write_field_csv(std::ostream& out, const ScalarField& field, double t = 0.0);
void write_field_csv(const std::filesystem::path& path, const SpaceTimeField& field);
void write_field_csv(const std::filesystem::path& path, const ScalarField& field, double t = 0.0);

/// Reads a field written by write_field_csv. Row count and coordinates must
/// match `disc`; throws ConfigError otherwise.
SpaceTimeField read_field_csv(std::istream& in, const Discretization& disc);
SpaceTimeField read_field_csv(const std::filesystem::path& path, const Discretization& disc);
/// Single-level variant (rows for one time level, t = 0).
ScalarField read_scalar_csv(std::istream& in, const Discretization& disc);
ScalarField read_scalar_csv(const std::filesystem::path& path, const Discretization& disc);

/// `eps,fd_value,adjoint_value,rel_error`
void write_gradcheck_csv(std::ostream& out, const std::vector<GradcheckRow>& rows);

nlohmann::json to_json(const CostBreakdown& cost);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const OptimizeReport& report);

/// %.17g formatting.
std::string format_double(double v);

}  // namespace deadoil
