"""steerkit CLI custom exceptions."""

# Third Party
from click import ClickException, echo


class CliError(ClickException):
    """Custom exception to exclude the 'Error:' prefix from echos."""

    def __init__(self, message: str, exit_code: int = 1) -> None:
        """Carry the process exit status."""
        super().__init__(message)
        self.exit_code = exit_code

    def show(self, file=None):
        """Exclude 'Error:' prefix from raised exceptions."""
        echo(self.format_message(), file=file, err=file is None)
