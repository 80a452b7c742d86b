#include <cmath>
#include <string>

#include <httplib.h>

#include "lens3de/app/server.hpp"

namespace lens3de {

using nlohmann::json;

struct LensServer::Impl {
    Impl(LensSession& s, int t) : session(s), threads(t) {}
    LensSession& session;
    int threads;
    httplib::Server http;
};

namespace {

void send_json(httplib::Response& res, const json& j, int status = 200) {
    res.status = status;
    res.set_content(j.dump() + "\n", "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message) {
    send_json(res, error_json(code, message), status);
}

}  // namespace

LensServer::LensServer(LensSession& session, int render_threads)
    : impl_(std::make_unique<Impl>(session, render_threads)) {
    auto& http = impl_->http;
    Impl* self = impl_.get();

    http.Get("/scene", [self](const httplib::Request&, httplib::Response& res) {
        res.set_content(self->session.scene_payload(), "application/json");
    });

    http.Get("/frame", [self](const httplib::Request& req, httplib::Response& res) {
        double phase = 0.0;
        if (req.has_param("phase")) {
            const std::string p = req.get_param_value("phase");
            try {
                std::size_t used = 0;
                phase = std::stod(p, &used);
                if (used != p.size() || !std::isfinite(phase)) throw std::invalid_argument(p);
            } catch (const std::exception&) {
                send_error(res, 400, "invalid_value", "phase must be a finite number, got '" + p + "'");
                return;
            }
        }
        res.set_content(encode_ppm(self->session.frame(phase, self->threads)), "image/x-portable-pixmap");
    });

    http.Post("/lens/event", [self](const httplib::Request& req, httplib::Response& res) {
        json body;
        try {
            body = json::parse(req.body);
        } catch (const json::exception& e) {
            send_error(res, 400, "malformed_json", e.what());
            return;
        }
        try {
            send_json(res, self->session.handle_event(body));
        } catch (const ProtocolError& e) {
            send_error(res, 400, e.code(), e.what());
        }
    });

    http.Get("/selection", [self](const httplib::Request&, httplib::Response& res) {
        send_json(res, self->session.selection_json());
    });

    http.Get("/patch", [self](const httplib::Request&, httplib::Response& res) {
        send_json(res, self->session.patch_json());
    });

    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string msg = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            msg = e.what();
        } catch (...) {
        }
        send_error(res, 500, "internal", msg);
    });

    http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (!res.body.empty()) return;
        if (res.status == 404)
            send_error(res, 404, "not_found", "no endpoint " + req.method + " " + req.path);
        else if (res.status == 405)
            send_error(res, 405, "method_not_allowed", req.method + " not allowed on " + req.path);
    });
}

LensServer::~LensServer() { stop(); }

int LensServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->http.bind_to_any_port(host);
    return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool LensServer::listen() { return impl_->http.listen_after_bind(); }

void LensServer::stop() {
    if (impl_) impl_->http.stop();
}

void LensServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace lens3de
