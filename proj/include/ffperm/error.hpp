// Copyright 2026 The ffperm Authors
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

#ifndef FFPERM_ERROR_HPP_
#define FFPERM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffperm {

enum class Errc {
  kCompositeP,
  kReducibleModulus,
  kZeroElement,
  kBadRange,
  kMixedFields,
  kBadChain,
  kBadParam,
  kEvenCharacteristic,
  kNotPermutation,
  kFieldTooLarge,
  kZeroC,
  kGammaOne,
  kNonCoprimePeriods,
  kEmptySequence,
  kParse,
};

constexpr std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::kCompositeP: return "CompositeP";
    case Errc::kReducibleModulus: return "ReducibleModulus";
    case Errc::kZeroElement: return "ZeroElement";
    case Errc::kBadRange: return "BadRange";
    case Errc::kMixedFields: return "MixedFields";
    case Errc::kBadChain: return "BadChain";
    case Errc::kBadParam: return "BadParam";
    case Errc::kEvenCharacteristic: return "EvenCharacteristic";
    case Errc::kNotPermutation: return "NotPermutation";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kZeroC: return "ZeroC";
    case Errc::kGammaOne: return "GammaOne";
    case Errc::kNonCoprimePeriods: return "NonCoprimePeriods";
    case Errc::kEmptySequence: return "EmptySequence";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ffperm

#endif  // FFPERM_ERROR_HPP_
