// Copyright 2026 The stabpac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABPAC_ERROR_HPP
#define STABPAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stabpac {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define STABPAC_DEFINE_ERROR(NAME)           \
    class NAME : public Error {              \
       public:                               \
        using Error::Error;                  \
    };

STABPAC_DEFINE_ERROR(MalformedPauli)
STABPAC_DEFINE_ERROR(DimensionMismatch)
STABPAC_DEFINE_ERROR(NonHermitianProduct)
STABPAC_DEFINE_ERROR(WidthMismatch)
STABPAC_DEFINE_ERROR(BadDimensions)
STABPAC_DEFINE_ERROR(BadQubitIndex)
STABPAC_DEFINE_ERROR(GroupTooLarge)
STABPAC_DEFINE_ERROR(InvalidGenerators)
STABPAC_DEFINE_ERROR(InconsistentTrainingSet)
STABPAC_DEFINE_ERROR(BadLabel)
STABPAC_DEFINE_ERROR(TooLarge)
STABPAC_DEFINE_ERROR(NonHermitianResult)
STABPAC_DEFINE_ERROR(BadParameters)
STABPAC_DEFINE_ERROR(FormatError)

#undef STABPAC_DEFINE_ERROR

}  // namespace stabpac

#endif
