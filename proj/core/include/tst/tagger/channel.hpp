#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tst {

/// Bidirectional stream of text lines.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  /// Throws PeerUnavailable when the peer has gone away.
  virtual void send(const std::string& line) = 0;
  /// nullopt on end of stream.
  virtual std::optional<std::string> receive() = 0;
};

/// Channel over a pair of file descriptors. Closes them on destruction when
/// `owns` is set.
class FdChannel : public LineChannel {
 public:
  FdChannel(int read_fd, int write_fd, bool owns);
  ~FdChannel() override;
  FdChannel(const FdChannel&) = delete;
  FdChannel& operator=(const FdChannel&) = delete;

  void send(const std::string& line) override;
  std::optional<std::string> receive() override;

 private:
  int read_fd_;
  int write_fd_;
  bool owns_;
  std::string buffer_;
};

/// Starts `argv` with its stdin/stdout connected to the returned channel.
/// The child is terminated and reaped when the channel is destroyed.
/// Throws PeerUnavailable if the program cannot be started.
std::unique_ptr<LineChannel> spawn_process(const std::vector<std::string>& argv);

/// Throws PeerUnavailable when the connection fails.
std::unique_ptr<LineChannel> connect_tcp(const std::string& host, int port);

/// Listening socket on 127.0.0.1 (port 0 picks a free one).
class TcpListener {
 public:
  explicit TcpListener(int port);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  int port() const noexcept { return port_; }
  /// Blocks until a client connects.
  std::unique_ptr<LineChannel> accept();

 private:
  int fd_ = -1;
  int port_ = 0;
};

}  // namespace tst
