#include "imexilw/output.hpp"

#include <fstream>
#include <system_error>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
  if (path.has_parent_path()) ensure_directory(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out.precision(17);
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

void write_header(std::ofstream& out, const Model& model, bool two_d) {
  out << (two_d ? "x,y" : "x");
  for (const auto& n : model.component_names()) out << ',' << n;
  for (const auto& n : model.derived_names()) out << ',' << n;
  out << '\n';
}

void write_values(std::ofstream& out, const Model& model, const State& u) {
  for (int c = 0; c < u.size(); ++c) out << ',' << u(c);
  if (!model.derived_names().empty()) {
    for (double d : model.derived(u)) out << ',' << d;
  }
  out << '\n';
}

}  // namespace

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create directory '" + dir.string() + "': " + ec.message());
}

void write_field_csv(const std::filesystem::path& path, const Field1D& field, const Grid1D& grid,
                     const Model& model) {
  auto out = open_for_writing(path);
  write_header(out, model, false);
  for (int j = 0; j < grid.n; ++j) {
    out << grid.x(j);
    write_values(out, model, field[j]);
  }
  finish(out, path);
}

void write_field_csv(const std::filesystem::path& path, const Field2D& field, const Grid2D& grid,
                     const Model& model) {
  auto out = open_for_writing(path);
  write_header(out, model, true);
  for (const NodeIndex& p : grid.interior_nodes()) {
    out << grid.x(p.i) << ',' << grid.y(p.j);
    write_values(out, model, field(p));
  }
  finish(out, path);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_for_writing(path);
  out << text;
  finish(out, path);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  auto out = open_for_writing(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

}  // namespace imexilw
