#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "imexilw/grid.hpp"
#include "imexilw/model.hpp"

namespace imexilw {

// Creates the directory (and parents) or throws IoError.
void ensure_directory(const std::filesystem::path& dir);

// One row per interior node: coordinates, conserved components, derived quantities.
void write_field_csv(const std::filesystem::path& path, const Field1D& field, const Grid1D& grid,
                     const Model& model);
void write_field_csv(const std::filesystem::path& path, const Field2D& field, const Grid2D& grid,
                     const Model& model);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace imexilw
