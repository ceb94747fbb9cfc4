/*
   Copyright 2026 the itp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ITP_ERRORS_HPP
#define ITP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace itp {

/// Malformed input text (graph files, polynomial expressions, parameter files).
class parse_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured size cap; refused up front.
class cap_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// divide_exact was asked for a quotient that does not exist in the ring.
class exact_division_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace itp

#endif
