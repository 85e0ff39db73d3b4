// Copyright 2026 The Tracelift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tracelift/timestamp.hpp"

#include <chrono>
#include <cstdio>

#include "tracelift/error.hpp"

namespace tracelift {

namespace chr = std::chrono;

Timestamp Timestamp::now() {
  auto ms = chr::duration_cast<chr::milliseconds>(
      chr::system_clock::now().time_since_epoch());
  return Timestamp(ms.count());
}

std::string Timestamp::to_string() const {
  chr::milliseconds total(millis_);
  auto days = chr::floor<chr::days>(total);
  chr::year_month_day ymd{chr::sys_days(days)};
  auto rest = total - days;
  auto h = chr::duration_cast<chr::hours>(rest);
  rest -= h;
  auto m = chr::duration_cast<chr::minutes>(rest);
  rest -= m;
  auto s = chr::duration_cast<chr::seconds>(rest);
  rest -= s;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(h.count()),
                static_cast<int>(m.count()), static_cast<int>(s.count()),
                static_cast<int>(rest.count()));
  return buf;
}

Timestamp Timestamp::parse(std::string_view text) {
  int y = 0;
  unsigned mo = 0, d = 0;
  int h = 0, mi = 0, s = 0, ms = 0;
  char z = 0;
  std::string copy(text);
  if (text.size() != 24 ||
      std::sscanf(copy.c_str(), "%4d-%2u-%2uT%2d:%2d:%2d.%3d%c", &y, &mo, &d,
                  &h, &mi, &s, &ms, &z) != 8 ||
      z != 'Z') {
    throw Error(ErrorKind::kValidation, "bad-timestamp",
                "expected YYYY-MM-DDTHH:MM:SS.mmmZ, got '" + copy + "'");
  }
  chr::year_month_day ymd{chr::year(y), chr::month(mo), chr::day(d)};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) {
    throw Error(ErrorKind::kValidation, "bad-timestamp",
                "out-of-range field in '" + copy + "'");
  }
  auto since_epoch = chr::sys_days(ymd).time_since_epoch() + chr::hours(h) +
                     chr::minutes(mi) + chr::seconds(s) + chr::milliseconds(ms);
  return Timestamp(chr::duration_cast<chr::milliseconds>(since_epoch).count());
}

}  // namespace tracelift
