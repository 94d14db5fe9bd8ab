// Copyright 2026 The hdemand Authors
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

#include "hdemand/model.hpp"

#include <string>

#include "hdemand/error.hpp"

namespace hdemand {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::perfect:
      return "perfect";
    case ModelKind::unbiased:
      return "unbiased";
    case ModelKind::biased:
      return "biased";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (ModelKind kind : kAllModels) {
    if (name == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown model kind '" + std::string(name) + "'");
}

}  // namespace hdemand
