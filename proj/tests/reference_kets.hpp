// Copyright 2026 The walkport Authors
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


// Hand-expanded ket terms of the protocol states, used as test oracles.

#pragma once

#include "test_util.hpp"

namespace walkport::testing {

// Registers A1 B1 A2 A3 B2 B3; a '-' belongs to the digit after it.
inline constexpr KetTerm kLinePsi1[] = {
    {0, 0, "100000"}, {0, 1, "100010"}, {1, 0, "-101000"}, {1, 1, "-101010"}};
inline constexpr KetTerm kLinePsi2[] = {
    {0, 0, "110000"}, {0, 1, "1-10010"}, {1, 0, "-111000"}, {1, 1, "-1-11010"}};
inline constexpr KetTerm kLinePsi3[] = {
    {0, 0, "120000"},  {0, 0, "100100"},  {0, 1, "100010"},  {0, 1, "1-20110"},
    {1, 0, "-121000"}, {1, 0, "-101100"}, {1, 1, "-101010"}, {1, 1, "-1-21110"}};
inline constexpr KetTerm kLinePsi4[] = {
    {0, 0, "220000"},   {0, 0, "020001"},  {0, 0, "200100"},   {0, 0, "000101"},
    {0, 1, "200010"},   {0, 1, "000011"},  {0, 1, "2-20110"},  {0, 1, "0-20111"},
    {1, 0, "021000"},   {1, 0, "-221001"}, {1, 0, "001100"},   {1, 0, "-201101"},
    {1, 1, "001010"},   {1, 1, "-201011"}, {1, 1, "0-21110"},  {1, 1, "-2-21111"}};

// Cycle state after all four walks.
inline constexpr KetTerm kCycleFinal[] = {
    {0, 0, "220000"}, {0, 0, "200100"}, {0, 0, "020001"}, {0, 0, "000101"},
    {1, 0, "021000"}, {1, 0, "001100"}, {1, 0, "221001"}, {1, 0, "201101"},
    {0, 1, "200010"}, {0, 1, "220110"}, {0, 1, "000011"}, {0, 1, "020111"},
    {1, 1, "001010"}, {1, 1, "021110"}, {1, 1, "201011"}, {1, 1, "221111"}};

// a0 b0 block of the final two-qubit states.
inline constexpr KetTerm kSingle2QBlock[] = {
    {0, 0, "222200000000"}, {0, 0, "202200000001"}, {0, 0, "022200000010"},
    {0, 0, "002200000011"}, {0, 0, "222000010000"}, {0, 0, "202000010001"},
    {0, 0, "022000010010"}, {0, 0, "002000010011"}, {0, 0, "220200100000"},
    {0, 0, "200200100001"}, {0, 0, "020200100010"}, {0, 0, "000200100011"},
    {0, 0, "220000110000"}, {0, 0, "200000110001"}, {0, 0, "020000110010"},
    {0, 0, "000000110011"}};
inline constexpr KetTerm kTwoStepBlock[] = {
    {0, 0, "4400000000"}, {0, 0, "3400000001"}, {0, 0, "1400000010"}, {0, 0, "0400000011"},
    {0, 0, "4300010000"}, {0, 0, "3300010001"}, {0, 0, "1300010010"}, {0, 0, "0300010011"},
    {0, 0, "4100100000"}, {0, 0, "3100100001"}, {0, 0, "1100100010"}, {0, 0, "0100100011"},
    {0, 0, "4000110000"}, {0, 0, "3000110001"}, {0, 0, "1000110010"}, {0, 0, "0000110011"}};

// Targets of the two-qubit protocols after the all-zero position outcome
// and the all-plus coin outcome, before correction. Prefactor 1/16.
inline constexpr KetTerm kTwoQubitZeroBranch[] = {
    {0, 0, "1111"}, {0, 1, "1011"}, {0, 2, "0111"}, {0, 3, "0011"},
    {1, 0, "1110"}, {1, 1, "1010"}, {1, 2, "0110"}, {1, 3, "0010"},
    {2, 0, "1101"}, {2, 1, "1001"}, {2, 2, "0101"}, {2, 3, "0001"},
    {3, 0, "1100"}, {3, 1, "1000"}, {3, 2, "0100"}, {3, 3, "0000"}};

}  // namespace walkport::testing
