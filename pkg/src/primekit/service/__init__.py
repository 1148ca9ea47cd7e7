"""HTTP service layer: pydantic schemas, transport-free handlers, FastAPI app.

The CLI calls the handlers directly; `primekit.service.app` wires the same
handlers to routes. Importing this package does not pull in FastAPI; only
`primekit.service.app` does.
"""
