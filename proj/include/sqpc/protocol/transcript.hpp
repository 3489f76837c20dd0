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

#ifndef SQPC_PROTOCOL_TRANSCRIPT_HPP
#define SQPC_PROTOCOL_TRANSCRIPT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqpc/protocol/types.hpp"

namespace sqpc {

enum class Sender : std::uint8_t { Tp, Alice, Bob, Eve };
enum class Visibility : std::uint8_t { Public, TpOnly };

std::string_view to_string(Sender s);
std::string_view to_string(Visibility v);

/// One classical announcement. `positions` and `values` run in parallel
/// when both are present; a bare bit string leaves `positions` empty.
struct Message {
  Sender sender = Sender::Tp;
  Visibility visibility = Visibility::Public;
  std::string topic;
  std::vector<std::size_t> positions;
  std::vector<int> values;
};

/// Append-only log of classical traffic.
class Transcript {
 public:
  void append(Message m) { messages_.push_back(std::move(m)); }
  const std::vector<Message>& messages() const { return messages_; }

  /// Everything TP is allowed to read: public traffic plus messages
  /// addressed to TP alone.
  std::vector<const Message*> tp_view() const;

  /// Last message with `topic` visible to TP; throws std::out_of_range if
  /// none.
  const Message& tp_find(std::string_view topic) const;

  /// Position -> value map of a TP-visible message.
  std::map<std::size_t, int> tp_table(std::string_view topic) const;

 private:
  std::vector<Message> messages_;
};

}  // namespace sqpc

#endif  // SQPC_PROTOCOL_TRANSCRIPT_HPP
