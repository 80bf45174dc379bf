#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "htg/grid.hpp"

namespace htg {

inline constexpr int kServiceSchemaVersion = 1;

/// Transport-independent request handlers over a fixed set of grids. Grids are
/// loaded once and never modified, so handlers may run concurrently.
class GeometryService {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  explicit GeometryService(std::map<std::string, HyperTreeGrid> grids);

  /// Loads every `*.htg` file of a directory; the grid name is the file stem.
  static GeometryService load_directory(const std::filesystem::path& directory);

  /// GET /grids
  Response list_grids() const;

  /// POST /grids/{name}/surface with body
  /// {"camera": {"w","h","z","s","cx","cy"}, "color_by": "depth" | <field>}.
  Response surface(const std::string& name, std::string_view body) const;

  const std::map<std::string, HyperTreeGrid>& grids() const noexcept { return grids_; }

 private:
  std::map<std::string, HyperTreeGrid> grids_;
};

/// HTTP binding of GeometryService.
class HttpServer {
 public:
  explicit HttpServer(const GeometryService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to host:port; port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace htg
