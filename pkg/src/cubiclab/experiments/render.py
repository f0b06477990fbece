"""Markdown summaries rendered from Jinja2 templates."""

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader


class ReportRenderer:
    """Renders run summaries from the templates in src/cubiclab/templates/."""

    def __init__(self, templates_dir: Path | None = None):
        """Initialize the renderer.

        Args:
            templates_dir: Directory containing report templates. Defaults to
                        the templates/ directory inside the cubiclab package.
        """
        if templates_dir is None:
            templates_dir = Path(__file__).parent.parent / "templates"

        self.env = Environment(
            loader=FileSystemLoader(str(templates_dir)),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def render(self, template_name: str, context: dict[str, Any]) -> str:
        """Render a template with a context dictionary.

        Args:
            template_name: Name of template file (e.g., "certificate.md")
            context: Values referenced by the template

        Returns:
            Rendered markdown
        """
        template = self.env.get_template(template_name)
        return template.render(**context)
