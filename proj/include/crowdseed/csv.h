// Copyright 2026 The Crowdseed Authors
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

#ifndef CROWDSEED_CSV_H_
#define CROWDSEED_CSV_H_

#include <istream>
#include <string>
#include <vector>

namespace crowdseed {

// Splits one CSV record. Handles double-quoted fields with embedded commas
// and doubled quotes; a trailing '\r' is dropped.
std::vector<std::string> SplitCsvLine(const std::string& line);

// Reads one logical record, joining physical lines while inside quotes.
// Returns false at end of input.
bool ReadCsvRecord(std::istream& in, std::string* record);

// Quotes `field` if it contains a comma, quote or newline.
std::string EscapeCsvField(const std::string& field);

// Shortest decimal that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace crowdseed

#endif  // CROWDSEED_CSV_H_
