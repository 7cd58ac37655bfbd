#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "chanda/meterdb.hpp"
#include "chanda/matcher.hpp"

namespace httplib {
class Server;
}

namespace chanda {

struct ServiceConfig {
  std::size_t max_text_bytes = 1 << 20;
  // Origins granted cross-origin access; "*" admits any.
  std::vector<std::string> allowed_origins;
  std::size_t default_k = kDefaultTopK;
};

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// HTTP facade over the pipeline. Handlers are callable directly; mount()
// wires them to a server. The database may be installed after startup.
class Service {
 public:
  explicit Service(ServiceConfig config = {});

  void set_database(std::shared_ptr<const MetricalDatabase> db);
  std::shared_ptr<const MetricalDatabase> database() const;

  HttpReply identify(std::string_view body) const;  // POST /identify
  HttpReply meters() const;                         // GET /meters
  HttpReply health() const;                         // GET /health

  // CORS header value for a request origin, empty when not allowed.
  std::string allow_origin(std::string_view origin) const;

  void mount(httplib::Server& server) const;

 private:
  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const MetricalDatabase> db_;
};

}  // namespace chanda
