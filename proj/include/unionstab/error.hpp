// Copyright 2026 The UnionStab Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unionstab {

enum class ErrorKind {
    CapExceeded,
    BadDegree,
    NonIntegralTransform,
    NotASubcode,
    QuotientTooLarge,
    BadParams,
    ConstructionMismatch,
    NotNested,
    NotAUnionOfCosets,
    StrategyInfeasible,
    BadSymbol,
    LengthMismatch,
    NotCommuting,
    DependentGenerators,
    NotDualContaining,
    BadChain,
    BadMap,
    DuplicateCoset,
    NotPureEnough,
    BudgetExceeded,
    NonCliffordGate,
    CollisionAfterReduction,
    NotFound,
    TooManyQubits,
    Parse,
};

inline std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::NonIntegralTransform: return "NonIntegralTransform";
        case ErrorKind::NotASubcode: return "NotASubcode";
        case ErrorKind::QuotientTooLarge: return "QuotientTooLarge";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::ConstructionMismatch: return "ConstructionMismatch";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::NotAUnionOfCosets: return "NotAUnionOfCosets";
        case ErrorKind::StrategyInfeasible: return "StrategyInfeasible";
        case ErrorKind::BadSymbol: return "BadSymbol";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::DependentGenerators: return "DependentGenerators";
        case ErrorKind::NotDualContaining: return "NotDualContaining";
        case ErrorKind::BadChain: return "BadChain";
        case ErrorKind::BadMap: return "BadMap";
        case ErrorKind::DuplicateCoset: return "DuplicateCoset";
        case ErrorKind::NotPureEnough: return "NotPureEnough";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NonCliffordGate: return "NonCliffordGate";
        case ErrorKind::CollisionAfterReduction: return "CollisionAfterReduction";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::TooManyQubits: return "TooManyQubits";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every library failure is reported through this type; `kind()` is the
/// machine-checkable part, `what()` carries context for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace unionstab
