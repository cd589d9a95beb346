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

#pragma once

#include <memory>

#include "r3/service/api.hpp"

namespace r3::service {

/// HTTP front end for Api.
///
///   GET  /health            corpus size
///   GET  /recipes           recipe cards
///   GET  /recipes/{id}      one canonical recipe document
///   POST /query             JSON body, or multipart with `query` and `image` parts
///   POST /admin/reload      reload the corpus from disk and swap it in
///   GET  /media/{path}      corpus media asset
class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds to config.bind_address; port 0 picks a free port. Returns the
  // bound port. Throws Error{kIo} when binding fails.
  int bind();
  // Blocks until stop(). bind() must have succeeded.
  void listen();
  void stop();
  bool running() const;

  Api& api();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace r3::service
