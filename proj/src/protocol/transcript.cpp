// Copyright 2026 The SQPC Simulator Authors
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

#include "sqpc/protocol/transcript.hpp"

#include <stdexcept>
#include <string>

namespace sqpc {

std::string_view to_string(Sender s) {
  switch (s) {
    case Sender::Tp: return "TP";
    case Sender::Alice: return "ALICE";
    case Sender::Bob: return "BOB";
    case Sender::Eve: return "EVE";
  }
  return "?";
}

std::string_view to_string(Visibility v) { return v == Visibility::Public ? "PUBLIC" : "TP_ONLY"; }

std::vector<const Message*> Transcript::tp_view() const {
  std::vector<const Message*> view;
  view.reserve(messages_.size());
  for (const auto& m : messages_) {
    if (m.visibility == Visibility::Public || m.visibility == Visibility::TpOnly) view.push_back(&m);
  }
  return view;
}

const Message& Transcript::tp_find(std::string_view topic) const {
  const auto view = tp_view();
  for (auto it = view.rbegin(); it != view.rend(); ++it) {
    if ((*it)->topic == topic) return **it;
  }
  throw std::out_of_range("no message with topic " + std::string(topic));
}

std::map<std::size_t, int> Transcript::tp_table(std::string_view topic) const {
  const Message& m = tp_find(topic);
  if (m.positions.size() != m.values.size()) {
    throw std::logic_error("message " + m.topic + " is not a position table");
  }
  std::map<std::size_t, int> table;
  for (std::size_t i = 0; i < m.positions.size(); ++i) table[m.positions[i]] = m.values[i];
  return table;
}

}  // namespace sqpc
