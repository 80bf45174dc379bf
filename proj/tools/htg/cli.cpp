#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "htg/adaptive_surface.hpp"
#include "htg/canonical.hpp"
#include "htg/error.hpp"
#include "htg/geometry_filter.hpp"
#include "htg/grid_io.hpp"
#include "htg/mesh_io.hpp"
#include "htg/selection.hpp"
#include "htg/service.hpp"

namespace htg::cli {

namespace {

struct Options {
  std::string grid_path;
  std::string out_path;
  std::string format = "native";

  std::string name;
  std::uint64_t seed = 42;
  double mask_density = 0.0;

  std::string camera;
  double height_scale = 1.0;

  std::string ids;
  std::string points;
  std::string request_path;
  bool preserve_topology = false;
  bool include_masked = false;

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string grids_dir;
};

std::vector<std::string> split(const std::string& text, const std::string& separators) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (separators.find(ch) != std::string::npos) {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

double to_double(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParams, std::string("bad number '") + token + "' in " + what);
  }
}

std::uint64_t to_id(const std::string& token) {
  try {
    std::size_t used = 0;
    if (!token.empty() && token[0] == '-') throw std::invalid_argument(token);
    const auto value = std::stoull(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParams, "bad cell Id '" + token + "'");
  }
}

Camera2D parse_camera(const std::string& text) {
  const auto parts = split(text, ",");
  if (parts.size() != 6) {
    throw Error(ErrorCode::BadParams, "--camera expects w,h,z,s,cx,cy");
  }
  Camera2D camera;
  camera.window_w = to_double(parts[0], "--camera");
  camera.window_h = to_double(parts[1], "--camera");
  camera.zoom = to_double(parts[2], "--camera");
  camera.scale_threshold = to_double(parts[3], "--camera");
  camera.center = {to_double(parts[4], "--camera"), to_double(parts[5], "--camera")};
  try {
    camera.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::BadParams, e.what());
  }
  return camera;
}

/// Strips '#' comments and returns the remaining lines.
std::vector<std::string> request_lines(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

LocationQuery parse_points(const std::vector<std::string>& entries) {
  LocationQuery query;
  query.dimension = 0;
  for (const auto& entry : entries) {
    const auto coords = split(entry, ", \t\r");
    if (coords.size() != 2 && coords.size() != 3) {
      throw Error(ErrorCode::BadParams, "point '" + entry + "' needs 2 or 3 coordinates");
    }
    if (query.dimension != 0 && coords.size() != query.dimension) {
      throw Error(ErrorCode::BadParams, "points mix 2D and 3D coordinates");
    }
    query.dimension = static_cast<unsigned>(coords.size());
    Vec3 p{0.0, 0.0, 0.0};
    for (std::size_t a = 0; a < coords.size(); ++a) p[a] = to_double(coords[a], "points");
    query.points.push_back(p);
  }
  return query;
}

std::string format_ms(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
  return buffer;
}

void print_summary(std::ostream& out, const std::string& command, std::size_t input_cells,
                   std::size_t output_cells, double elapsed_ms) {
  out << "htg " << command << " input_cells=" << input_cells << " output_cells=" << output_cells
      << " elapsed_ms=" << format_ms(elapsed_ms) << '\n';
}

template <class Fn>
auto timed(double& elapsed_ms, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <class Mesh>
void write_mesh(const Options& options, const Mesh& mesh) {
  if (options.out_path.empty()) return;
  std::ofstream file(options.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + options.out_path + "' for writing");
  if (options.format == "obj") {
    write_obj(file, mesh);
  } else {
    write_native(file, mesh);
  }
  if (!file) throw Error(ErrorCode::IoError, "failed writing '" + options.out_path + "'");
}

int run_gen(const Options& options, std::ostream& out) {
  double elapsed = 0.0;
  const HyperTreeGrid grid =
      timed(elapsed, [&] { return canonical_grid(options.name, options.seed, options.mask_density); });
  write_grid_file(grid, options.out_path);
  print_summary(out, "gen", 0, grid.total_cells(), elapsed);
  return kSuccess;
}

int run_surface_like(const std::string& command, const Options& options, std::ostream& out) {
  const HyperTreeGrid grid = read_grid_file(options.grid_path);
  double elapsed = 0.0;
  PolyMesh mesh;
  if (command == "surface") {
    mesh = timed(elapsed, [&] { return surface_for_camera_or_full(grid, std::nullopt); });
  } else if (command == "adaptive") {
    if (options.camera.empty()) throw Error(ErrorCode::BadParams, "adaptive requires --camera");
    const Camera2D camera = parse_camera(options.camera);
    mesh = timed(elapsed, [&] { return adaptive_surface(grid, camera); });
  } else {
    mesh = timed(elapsed, [&] { return elevate_by_depth(grid, options.height_scale); });
  }
  write_mesh(options, mesh);
  print_summary(out, command, grid.total_cells(), mesh.quad_count(), elapsed);
  return kSuccess;
}

int run_select(const std::string& command, const Options& options, std::ostream& out) {
  const HyperTreeGrid grid = read_grid_file(options.grid_path);
  SelectionRequest request;
  request.preserve_topology = options.preserve_topology;
  request.include_masked = options.include_masked;
  if (options.preserve_topology && options.format == "obj") {
    throw Error(ErrorCode::BadParams, "--preserve-topology output has no OBJ form; use --format native");
  }

  if (command == "select-ids") {
    std::vector<std::string> tokens = split(options.ids, ",");
    if (!options.request_path.empty()) {
      for (const auto& line : request_lines(options.request_path)) {
        for (auto& token : split(line, ", \t\r")) tokens.push_back(std::move(token));
      }
    }
    IdQuery query;
    for (const auto& token : tokens) query.ids.push_back(GlobalId{to_id(token)});
    request.kind = std::move(query);
  } else {
    std::vector<std::string> entries = split(options.points, ";");
    if (!options.request_path.empty()) {
      for (auto& line : request_lines(options.request_path)) entries.push_back(std::move(line));
    }
    LocationQuery query = parse_points(entries);
    if (query.points.empty()) query.dimension = grid.dimension();
    request.kind = std::move(query);
  }

  double elapsed = 0.0;
  const SelectionOutput output = timed(elapsed, [&] { return extract_selection(grid, request); });
  std::size_t count = 0;
  if (const auto* mask = std::get_if<SelectionMask>(&output)) {
    count = mask->selected_count();
    if (!options.out_path.empty()) write_text_file(options.out_path, to_native_string(*mask));
  } else {
    const auto& mesh = std::get<UnstructuredMesh>(output);
    count = mesh.cell_count();
    write_mesh(options, mesh);
  }
  print_summary(out, command, grid.total_cells(), count, elapsed);
  return kSuccess;
}

int run_stats(const Options& options, std::ostream& out) {
  const HyperTreeGrid grid = read_grid_file(options.grid_path);
  double elapsed = 0.0;
  const GridStats stats = timed(elapsed, [&] { return grid_stats(grid); });
  if (options.out_path.empty()) {
    write_native(out, stats);
  } else {
    write_text_file(options.out_path, to_native_string(stats));
  }
  print_summary(out, "stats", grid.total_cells(), stats.leaf_count, elapsed);
  return kSuccess;
}

int run_serve(const Options& options, std::ostream& out) {
  const GeometryService service = GeometryService::load_directory(options.grids_dir);
  HttpServer server(service);
  const int port = server.bind(options.host, options.port);
  out << "htg serve listening on http://" << options.host << ':' << port << " with "
      << service.grids().size() << " grid(s)" << std::endl;
  server.listen();
  return kSuccess;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DescriptorLengthMismatch:
    case ErrorCode::FieldLengthMismatch:
    case ErrorCode::BadAxisCoordinates:
    case ErrorCode::DepthLimitExceeded:
      return kParseError;
    case ErrorCode::WrongDimension:
    case ErrorCode::DimensionMismatch:
      return kWrongDimension;
    case ErrorCode::IoError:
      return kIoError;
    case ErrorCode::BadParams:
    case ErrorCode::UnknownCanonicalGrid:
    case ErrorCode::NonPositiveArgument:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotRefined:
      return kBadParams;
  }
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypertree grid surface extraction and selection"};
  app.require_subcommand(1);
  Options o;

  auto add_grid_input = [&](CLI::App* cmd) {
    cmd->add_option("grid", o.grid_path, "Grid file")->required();
    cmd->add_option("--out", o.out_path, "Output file (omit to only print the summary)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"obj", "native"}));
  };

  auto* gen = app.add_subcommand("gen", "Write a canonical grid: paper2d, paper3d, uniform(d,f,k)");
  gen->add_option("name", o.name, "Canonical grid name")->required();
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--mask-density", o.mask_density, "Probability of masking each leaf")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", o.out_path, "Grid file to write")->required();

  auto* surface = app.add_subcommand("surface", "Full surface (2D leaves or 3D outer faces)");
  add_grid_input(surface);

  auto* adaptive = app.add_subcommand("adaptive", "Camera-dependent 2D surface");
  add_grid_input(adaptive);
  adaptive->add_option("--camera", o.camera, "w,h,z,s,cx,cy")->required();

  auto* elevate = app.add_subcommand("elevate", "2D leaves raised by depth");
  add_grid_input(elevate);
  elevate->add_option("--height-scale", o.height_scale, "World units per depth level");

  auto* select_ids = app.add_subcommand("select-ids", "Select cells by global Id");
  add_grid_input(select_ids);
  select_ids->add_option("--ids", o.ids, "Comma-separated global Ids");
  select_ids->add_option("--request", o.request_path, "Text file listing Ids");

  auto* select_locations = app.add_subcommand("select-locations", "Select leaves containing points");
  add_grid_input(select_locations);
  select_locations->add_option("--points", o.points, "x,y[,z];x,y[,z];...");
  select_locations->add_option("--request", o.request_path, "Text file listing one point per line");

  for (auto* cmd : {select_ids, select_locations}) {
    cmd->add_flag("--preserve-topology", o.preserve_topology, "Output a selection mask over the grid");
    cmd->add_flag("--include-masked", o.include_masked, "Allow masked cells to be selected");
  }

  auto* stats = app.add_subcommand("stats", "Cell counts and depth histogram");
  add_grid_input(stats);

  auto* serve = app.add_subcommand("serve", "HTTP geometry service");
  serve->add_option("--port", o.port, "Listen port (0 = any)");
  serve->add_option("--host", o.host, "Listen address");
  serve->add_option("--grids", o.grids_dir, "Directory of *.htg grid files")->required();

  std::vector<const char*> argv{"htg"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "htg: " << e.what() << '\n';
    return kBadParams;
  }

  try {
    if (gen->parsed()) return run_gen(o, out);
    if (surface->parsed()) return run_surface_like("surface", o, out);
    if (adaptive->parsed()) return run_surface_like("adaptive", o, out);
    if (elevate->parsed()) return run_surface_like("elevate", o, out);
    if (select_ids->parsed()) return run_select("select-ids", o, out);
    if (select_locations->parsed()) return run_select("select-locations", o, out);
    if (stats->parsed()) return run_stats(o, out);
    if (serve->parsed()) return run_serve(o, out);
  } catch (const Error& e) {
    err << "htg: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "htg: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace htg::cli
