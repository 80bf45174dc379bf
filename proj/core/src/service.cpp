#include "htg/service.hpp"

#include <chrono>
#include <cstdio>

#include <httplib.h>
#include <json.hpp>

#include "htg/adaptive_surface.hpp"
#include "htg/error.hpp"
#include "htg/grid_io.hpp"

namespace htg {

namespace {

GeometryService::Response error_response(int status, std::string_view code, const std::string& message) {
  nlohmann::json body;
  body["version"] = kServiceSchemaVersion;
  body["error"] = {{"code", code}, {"message", message}};
  return {status, body.dump()};
}

double camera_value(const nlohmann::json& camera, const char* key) {
  if (!camera.contains(key) || !camera.at(key).is_number()) {
    throw Error(ErrorCode::BadParams, std::string("camera.") + key + " must be a number");
  }
  return camera.at(key).get<double>();
}

std::string format_ms(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
  return buffer;
}

}  // namespace

GeometryService::GeometryService(std::map<std::string, HyperTreeGrid> grids) : grids_(std::move(grids)) {}

GeometryService GeometryService::load_directory(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) {
    throw Error(ErrorCode::IoError, "'" + directory.string() + "' is not a directory");
  }
  std::map<std::string, HyperTreeGrid> grids;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".htg") continue;
    grids.emplace(entry.path().stem().string(), read_grid_file(entry.path()));
  }
  return GeometryService(std::move(grids));
}

GeometryService::Response GeometryService::list_grids() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [name, grid] : grids_) {
    const GridStats stats = grid_stats(grid);
    const Box b = grid.bounds();
    nlohmann::json extent = nlohmann::json::array();
    nlohmann::json lo = nlohmann::json::array();
    nlohmann::json hi = nlohmann::json::array();
    for (unsigned a = 0; a < grid.dimension(); ++a) {
      extent.push_back(grid.spec().root_extent[a]);
      lo.push_back(b.lo[a]);
      hi.push_back(b.hi[a]);
    }
    list.push_back({{"name", name},
                    {"dimension", grid.dimension()},
                    {"factor", grid.branching_factor()},
                    {"root_extent", extent},
                    {"total_cells", stats.total_cells},
                    {"leaf_count", stats.leaf_count},
                    {"bounds", {{"min", lo}, {"max", hi}}}});
  }
  nlohmann::json body;
  body["version"] = kServiceSchemaVersion;
  body["grids"] = std::move(list);
  return {200, body.dump()};
}

GeometryService::Response GeometryService::surface(const std::string& name, std::string_view body) const {
  const auto it = grids_.find(name);
  if (it == grids_.end()) return error_response(404, "unknown_grid", "no grid named '" + name + "'");
  const HyperTreeGrid& grid = it->second;
  if (grid.dimension() != 2) {
    return error_response(400, "wrong_dimension", "adaptive surfaces are served for 2D grids only");
  }

  Camera2D camera;
  std::string color_by = "depth";
  try {
    const auto request = nlohmann::json::parse(body.begin(), body.end());
    if (!request.is_object() || !request.contains("camera") || !request.at("camera").is_object()) {
      return error_response(400, "invalid_request", "body must contain a camera object");
    }
    const auto& cam = request.at("camera");
    camera.window_w = camera_value(cam, "w");
    camera.window_h = camera_value(cam, "h");
    camera.zoom = camera_value(cam, "z");
    camera.scale_threshold = camera_value(cam, "s");
    camera.center = {camera_value(cam, "cx"), camera_value(cam, "cy")};
    camera.validate();
    if (request.contains("color_by")) {
      if (!request.at("color_by").is_string()) {
        return error_response(400, "invalid_request", "color_by must be a string");
      }
      color_by = request.at("color_by").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    return error_response(400, "invalid_request", e.what());
  } catch (const Error& e) {
    return error_response(400, "invalid_camera", e.what());
  }
  if (color_by != "depth" && color_by != "global_id" && grid.field(color_by) == nullptr) {
    return error_response(400, "unknown_field", "grid has no field '" + color_by + "'");
  }

  const auto start = std::chrono::steady_clock::now();
  const PolyMesh mesh = adaptive_surface(grid, camera);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const unsigned cap = depth_cap(camera, grid.branching_factor());
  const auto& values = mesh.cell_attributes.at(color_by);

  std::string out;
  out.reserve(mesh.quads.size() * 96 + 256);
  out += "{\"version\":" + std::to_string(kServiceSchemaVersion) + ",\"grid\":";
  out += nlohmann::json(name).dump();
  out += ",\"color_by\":" + nlohmann::json(color_by).dump() + ",\"points\":[";
  for (std::size_t i = 0; i < mesh.points.size(); ++i) {
    if (i) out += ',';
    out += format_number(mesh.points[i][0]);
    out += ',';
    out += format_number(mesh.points[i][1]);
  }
  out += "],\"quads\":[";
  for (std::size_t i = 0; i < mesh.quads.size(); ++i) {
    for (unsigned k = 0; k < 4; ++k) {
      if (i || k) out += ',';
      out += std::to_string(mesh.quads[i][k]);
    }
  }
  out += "],\"values\":[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  out += "],\"stats\":{\"quad_count\":" + std::to_string(mesh.quad_count()) +
         ",\"depth_cap\":" + std::to_string(cap) + ",\"elapsed_ms\":" + format_ms(elapsed) + "}}";
  return {200, std::move(out)};
}

struct HttpServer::Impl {
  const GeometryService& service;
  httplib::Server server;

  explicit Impl(const GeometryService& s) : service(s) {
    auto reply = [](httplib::Response& res, const GeometryService::Response& r) {
      res.status = r.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(r.body, "application/json");
    };
    server.Get("/grids", [this, reply](const httplib::Request&, httplib::Response& res) {
      reply(res, service.list_grids());
    });
    server.Post(R"(/grids/([^/]+)/surface)", [this, reply](const httplib::Request& req, httplib::Response& res) {
      reply(res, service.surface(req.matches[1], req.body));
    });
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
  }
};

HttpServer::HttpServer(const GeometryService& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::IoError, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::IoError, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace htg
