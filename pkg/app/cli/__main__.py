"""Entry point for the cli module."""

from app.cli.main import run

if __name__ == "__main__":
    run()
