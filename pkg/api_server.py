#!/usr/bin/env python3
"""REST API server for monoval."""

from flask import Flask, request, jsonify
from flask_cors import CORS

from src import __version__
from src.commands import SUBCOMMANDS, run_session
from src.config import Config
from src.errors import MonovalError, UsageError
from src.session import Session

app = Flask(__name__)
CORS(app)  # Enable CORS for all routes


@app.route('/health', methods=['GET'])
def health():
    """Health check endpoint."""
    return jsonify({
        'status': 'healthy',
        'service': 'monoval API',
        'version': __version__
    }), 200


@app.route('/api/status', methods=['GET'])
def get_status():
    """Effective configuration and the available subcommands."""
    return jsonify({
        'success': True,
        'data': {
            'config': Config.validate(),
            'subcommands': list(SUBCOMMANDS),
        }
    }), 200


@app.route('/api/<subcommand>', methods=['POST'])
def run(subcommand):
    """
    Run a subcommand against an inline session.

    Request body:
    {
        "session": {"variables": [...], "prime_basis": [...], "weights": [[...]]},
        "expressions": ["(x+y)/y"],     // optional
        "digits": 6,                    // optional
        "degree": 2                     // optional
    }

    Response:
    {
        "success": true,
        "data": <report>
    }
    """
    if subcommand not in SUBCOMMANDS:
        return jsonify({
            'success': False,
            'error': f'Unknown subcommand: {subcommand}'
        }), 404

    if not request.is_json:
        return jsonify({
            'success': False,
            'error': 'Content-Type must be application/json'
        }), 400

    body = request.get_json(silent=True)
    if not isinstance(body, dict) or 'session' not in body:
        return jsonify({
            'success': False,
            'error': 'Missing required field: session'
        }), 400

    expressions = body.get('expressions', [])
    if not isinstance(expressions, list) or not all(isinstance(e, str) for e in expressions):
        return jsonify({
            'success': False,
            'error': 'expressions must be a list of strings'
        }), 400

    for key in ('digits', 'degree'):
        value = body.get(key)
        if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
            return jsonify({
                'success': False,
                'error': f'{key} must be an integer'
            }), 400

    try:
        session = Session.from_dict(body['session'])
        data = run_session(
            session,
            subcommand,
            expressions=expressions,
            digits=body.get('digits'),
            degree=body.get('degree'),
        )
    except UsageError as e:
        return jsonify({
            'success': False,
            'error': str(e)
        }), 400
    except MonovalError as e:
        return jsonify({
            'success': False,
            'error': f'{type(e).__name__}: {e}'
        }), 422

    return jsonify({
        'success': True,
        'data': data
    }), 200


@app.errorhandler(404)
def not_found(error):
    """Handle 404 errors."""
    return jsonify({
        'success': False,
        'error': 'Endpoint not found'
    }), 404


@app.errorhandler(500)
def internal_error(error):
    """Handle 500 errors."""
    return jsonify({
        'success': False,
        'error': 'Internal server error'
    }), 500


if __name__ == '__main__':
    print("=" * 60)
    print("monoval API Server")
    print("=" * 60)

    print(f"\n✓ Server will start on http://{Config.HOST}:{Config.PORT}")
    print(f"✓ Debug mode: {Config.DEBUG}")
    print(f"✓ Default digits: {Config.DEFAULT_DIGITS}")
    print(f"✓ Group order bound: {Config.MAX_GROUP_ORDER}")

    print("\nAPI Endpoints:")
    print("  GET  /health             - Health check")
    print("  GET  /api/status         - Configuration and subcommands")
    for name in SUBCOMMANDS:
        print(f"  POST /api/{name:<14} - Run {name}")

    print("\nPress Ctrl+C to stop the server")
    print("=" * 60)

    app.run(host=Config.HOST, port=Config.PORT, debug=Config.DEBUG)
