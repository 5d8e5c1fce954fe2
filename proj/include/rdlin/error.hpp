/*
 * Copyright 2026 the rdlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace rdlin {

enum class Errc {
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    DimensionMismatch,
    NonSquare,
    IndexOutOfRange,
    CauchyCollision,
    Singular,
    SingularDiagonal,
    NotPermutation,
    TooLarge,
    NotMDS,
    IsMDS,
    NotSymmetric,
    NotRepresentative,
    EvenOrder,
    NotCirculant,
    ExcludedOrder,
    ConstructionDegenerate,
    ZeroEntry,
    ConditionNotSatisfied,
    ParseError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ReducibleModulus:       return "ReducibleModulus";
        case Errc::DegreeMismatch:         return "DegreeMismatch";
        case Errc::DivisionByZero:         return "DivisionByZero";
        case Errc::DimensionMismatch:      return "DimensionMismatch";
        case Errc::NonSquare:              return "NonSquare";
        case Errc::IndexOutOfRange:        return "IndexOutOfRange";
        case Errc::CauchyCollision:        return "CauchyCollision";
        case Errc::Singular:               return "Singular";
        case Errc::SingularDiagonal:       return "SingularDiagonal";
        case Errc::NotPermutation:         return "NotPermutation";
        case Errc::TooLarge:               return "TooLarge";
        case Errc::NotMDS:                 return "NotMDS";
        case Errc::IsMDS:                  return "IsMDS";
        case Errc::NotSymmetric:           return "NotSymmetric";
        case Errc::NotRepresentative:      return "NotRepresentative";
        case Errc::EvenOrder:              return "EvenOrder";
        case Errc::NotCirculant:           return "NotCirculant";
        case Errc::ExcludedOrder:          return "ExcludedOrder";
        case Errc::ConstructionDegenerate: return "ConstructionDegenerate";
        case Errc::ZeroEntry:              return "ZeroEntry";
        case Errc::ConditionNotSatisfied:  return "ConditionNotSatisfied";
        case Errc::ParseError:             return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}

    Errc code;
};

} // namespace rdlin
