#pragma once

#include <memory>
#include <string>

#include "lens3de/app/session.hpp"

namespace lens3de {

/// HTTP front end for a LensSession:
///   GET  /scene            scene payload
///   GET  /frame?phase=p    PPM of the current lens and selection
///   POST /lens/event       LensSession::handle_event
///   GET  /selection        {"selected_seed_ids", "lens"}
///   GET  /patch            {"patch_full", "patch_partial", "lens"}
/// JSON bodies are one line terminated by '\n'; errors use status 400/404.
class LensServer {
public:
    explicit LensServer(LensSession& session, int render_threads = 1);
    ~LensServer();
    LensServer(const LensServer&) = delete;
    LensServer& operator=(const LensServer&) = delete;

    /// Binds to host:port (port 0 picks a free port). Returns the bound port
    /// or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace lens3de
