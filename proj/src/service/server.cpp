// Copyright 2026 The R3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "r3/service/server.hpp"

#include "httplib.h"

namespace r3::service {

namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

struct Server::Impl {
  explicit Impl(ServiceConfig config) : api(std::move(config)) {}

  Api api;
  httplib::Server http;
  bool bound = false;
};

Server::Server(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {
  auto& http = impl_->http;
  Api& api = impl_->api;
  http.set_payload_max_length(static_cast<std::size_t>(api.config().max_upload_bytes) + 64 * 1024);

  http.Get("/health", [&api](const httplib::Request&, httplib::Response& res) { send(res, api.health()); });
  http.Get("/recipes", [&api](const httplib::Request&, httplib::Response& res) { send(res, api.list_recipes()); });
  http.Get(R"(/recipes/([^/]+))", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.get_recipe(req.matches[1]));
  });
  http.Get(R"(/media/(.+))", [&api](const httplib::Request& req, httplib::Response& res) {
    send(res, api.media(req.matches[1]));
  });
  http.Post("/query", [&api](const httplib::Request& req, httplib::Response& res) {
    if (!req.is_multipart_form_data()) {
      send(res, api.query_json(req.body));
      return;
    }
    std::optional<std::string> query_part;
    std::optional<UploadedImage> image;
    if (req.has_file("query")) query_part = req.get_file_value("query").content;
    if (req.has_file("image")) {
      const auto file = req.get_file_value("image");
      image = UploadedImage{file.content, file.filename.empty() ? std::string("upload") : file.filename};
    }
    send(res, api.query_multipart(query_part, image));
  });
  http.Post("/admin/reload", [&api](const httplib::Request&, httplib::Response& res) { send(res, api.reload()); });

  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const std::string code = res.status == 404 ? "NOT_FOUND" : res.status == 413 ? "PAYLOAD_TOO_LARGE" : "HTTP_ERROR";
    res.set_content(error_to_json(code, httplib::status_message(res.status)).dump(2) + "\n", "application/json");
  });
  http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(error_to_json("INTERNAL", message).dump(2) + "\n", "application/json");
  });
}

Server::~Server() { stop(); }

int Server::bind() {
  const auto addr = parse_bind_address(impl_->api.config().bind_address);
  int port = addr.port;
  // SO_REUSEADDR only: httplib's default adds SO_REUSEPORT, which would let a
  // second server share the port instead of failing.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (port == 0) {
    port = impl_->http.bind_to_any_port(addr.host);
  } else if (!impl_->http.bind_to_port(addr.host, port)) {
    port = -1;
  }
  if (port < 0) throw Error(ErrorCode::kIo, "cannot bind", impl_->api.config().bind_address);
  impl_->bound = true;
  return port;
}

void Server::listen() {
  if (!impl_->bound) throw Error(ErrorCode::kInvalidArgument, "listen() before bind()");
  impl_->http.listen_after_bind();
}

void Server::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

bool Server::running() const { return impl_->http.is_running(); }

Api& Server::api() { return impl_->api; }

}  // namespace r3::service
