#include <cstdlib>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "chanda/errors.hpp"
#include "chanda/meterdb.hpp"
#include "chanda/service.hpp"

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value != nullptr && *value != '\0' ? std::string(value) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  std::string host = env_or("CHANDA_HOST", "127.0.0.1");
  int port = std::atoi(env_or("CHANDA_PORT", "8080").c_str());
  std::string db_path;
  chanda::ServiceConfig config;

  CLI::App app{"HTTP service for meter identification", "chanda-serve"};
  app.add_option("--host", host, "bind address")->capture_default_str();
  app.add_option("--port", port, "bind port")->check(CLI::Range(0, 65535))->capture_default_str();
  app.add_option("--db", db_path, "meter definition file");
  app.add_option("--allow-origin", config.allowed_origins, "origin allowed for CORS (repeatable)");
  app.add_option("--max-text-bytes", config.max_text_bytes, "request text cap")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const std::filesystem::path path =
      db_path.empty() ? chanda::default_database_path() : std::filesystem::path(db_path);

  chanda::Service service(config);
  httplib::Server server;
  service.mount(server);

  // Serve /health with 503 while the database loads.
  std::thread loader([&] {
    try {
      service.set_database(std::make_shared<const chanda::MetricalDatabase>(
          chanda::MetricalDatabase::load_file(path)));
    } catch (const chanda::Error& e) {
      std::cerr << "error: cannot load meter database '" << path.string() << "': " << e.what()
                << "\n";
      std::_Exit(2);
    }
  });

  std::cerr << "listening on " << host << ":" << port << "\n";
  const bool ok = server.listen(host, port);
  loader.join();
  return ok ? 0 : 1;
}
