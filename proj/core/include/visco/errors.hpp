// Copyright 2026 The Authors.
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

#include <stdexcept>
#include <string>

namespace visco {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define VISCO_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                           \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

VISCO_DEFINE_ERROR(IndexError);
VISCO_DEFINE_ERROR(RankDeficient);
VISCO_DEFINE_ERROR(OnHyperplane);
VISCO_DEFINE_ERROR(ZeroScale);
VISCO_DEFINE_ERROR(BadParams);
VISCO_DEFINE_ERROR(BadIndex);
VISCO_DEFINE_ERROR(NotFacet);
VISCO_DEFINE_ERROR(InvalidSubdivision);
VISCO_DEFINE_ERROR(NotMatroidal);
VISCO_DEFINE_ERROR(NotUnique);
VISCO_DEFINE_ERROR(NotSimplicial);
VISCO_DEFINE_ERROR(NotUnimodular);
VISCO_DEFINE_ERROR(BadGluing);
VISCO_DEFINE_ERROR(NotSubcomplex);
VISCO_DEFINE_ERROR(OnDegenerate);
VISCO_DEFINE_ERROR(UnsupportedRank);
VISCO_DEFINE_ERROR(ParseError);

#undef VISCO_DEFINE_ERROR

}  // namespace visco
