#include "chanda/service.hpp"

#include <algorithm>

#include <httplib.h>
#include <json.hpp>

#include "chanda/errors.hpp"
#include "chanda/pipeline.hpp"
#include "chanda/utf8.hpp"

namespace chanda {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kVersion = "1.0.0";

HttpReply error_reply(int status, std::string_view message) {
  return {status, Json{{"error", message}}.dump() + "\n"};
}

HttpReply not_ready() { return error_reply(503, "meter database not loaded"); }

}  // namespace

Service::Service(ServiceConfig config) : config_(std::move(config)) {}

void Service::set_database(std::shared_ptr<const MetricalDatabase> db) {
  std::lock_guard lock(mutex_);
  db_ = std::move(db);
}

std::shared_ptr<const MetricalDatabase> Service::database() const {
  std::lock_guard lock(mutex_);
  return db_;
}

HttpReply Service::identify(std::string_view body) const {
  const auto db = database();
  if (!db) return not_ready();

  AnalyzeOptions options;
  options.k = config_.default_k;
  std::string text;
  try {
    const Json req = Json::parse(body);
    if (!req.is_object() || !req.contains("text") || !req.at("text").is_string()) {
      return error_reply(400, "body must be an object with a string 'text'");
    }
    text = req.at("text").get<std::string>();
    if (req.contains("mode")) {
      const auto mode = parse_mode(req.at("mode").get<std::string>());
      if (!mode) return error_reply(400, "mode must be 'line' or 'verse'");
      options.mode = *mode;
    }
    if (req.contains("scheme")) {
      const std::string name = req.at("scheme").get<std::string>();
      if (name != "auto") {
        options.scheme = parse_scheme(name);
        if (!options.scheme) return error_reply(400, "unknown scheme '" + name + "'");
      }
    }
    if (req.contains("k")) {
      if (!req.at("k").is_number_integer() || req.at("k").get<long long>() < 1) {
        return error_reply(400, "k must be a positive integer");
      }
      options.k = req.at("k").get<std::size_t>();
    }
  } catch (const Json::exception&) {
    return error_reply(400, "malformed request body");
  }

  if (text.size() > config_.max_text_bytes) {
    return error_reply(413, "text exceeds " + std::to_string(config_.max_text_bytes) + " bytes");
  }
  if (utf8::trim(text).empty()) return error_reply(422, "text is empty");

  try {
    const Report report = pipeline::analyze(text, *db, options);
    return {200, pipeline::export_report(report, *db, Format::Detailed)};
  } catch (const EmptyInput&) {
    return error_reply(422, "text is empty");
  } catch (const std::exception&) {
    return error_reply(500, "internal error");
  }
}

HttpReply Service::meters() const {
  const auto db = database();
  if (!db) return not_ready();
  Json list = Json::array();
  for (const auto& [name_latin, def] : db->meters()) {
    Json padas = Json::array();
    Json counts = Json::array();
    for (std::size_t i = 0; i < def.pada_patterns.size(); ++i) {
      const PadaPattern& p = def.pada_patterns[i];
      padas.push_back({{"pattern", p.text()},
                       {"gana", def.gana_formulas[i].empty() ? Json(nullptr)
                                                             : Json(def.gana_formulas[i])},
                       {"syllables", p.size()}});
      counts.push_back(p.size());
    }
    list.push_back({{"name", def.name},
                    {"name_latin", name_latin},
                    {"padas", padas},
                    {"syllable_counts", counts}});
  }
  return {200, Json{{"meters", list}}.dump(2) + "\n"};
}

HttpReply Service::health() const {
  const auto db = database();
  if (!db) return {503, Json{{"status", "loading"}, {"version", kVersion}}.dump() + "\n"};
  return {200, Json{{"status", "ok"}, {"version", kVersion}, {"meters", db->meters().size()}}
                       .dump() +
                   "\n"};
}

std::string Service::allow_origin(std::string_view origin) const {
  for (const std::string& allowed : config_.allowed_origins) {
    if (allowed == "*") return "*";
    if (!origin.empty() && allowed == origin) return std::string(origin);
  }
  return {};
}

void Service::mount(httplib::Server& server) const {
  const auto send = [this](const httplib::Request& req, httplib::Response& res,
                           const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
    const std::string origin = allow_origin(req.get_header_value("Origin"));
    if (!origin.empty()) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  };
  server.Post("/identify", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(req, res, identify(req.body));
  });
  server.Get("/meters", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(req, res, meters());
  });
  server.Get("/health", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(req, res, health());
  });
  server.Options(R"(/(identify|meters|health))",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   res.status = 204;
                   const std::string origin = allow_origin(req.get_header_value("Origin"));
                   if (origin.empty()) return;
                   res.set_header("Access-Control-Allow-Origin", origin);
                   res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
                   res.set_header("Access-Control-Allow-Headers", "Content-Type");
                   res.set_header("Vary", "Origin");
                 });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        res.status = 500;
        res.set_content(Json{{"error", "internal error"}}.dump() + "\n", "application/json");
      });
}

}  // namespace chanda
