import logging

from catalog.entries import CATALOG
from catalog.models import FamilyDocument
from catalog.serializers import CatalogEntrySerializer, FamilyDocumentSerializer
from cli.base import EngineCommand
from cli.choices import OutputFormatChoices
from cli.config import RunConfig
from cli.renderers import dump_json, write_output
from cli.validators import CommandValidator
from pearson.serializers import family_to_document

logger = logging.getLogger(__name__)


class Command(EngineCommand):
    help = "Lists, stores and shows family documents."

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True)

        listing = actions.add_parser("list", help="Built-in families and stored documents.")
        self.add_output_arguments(listing)

        adding = actions.add_parser("add", help="Stores a family JSON document.")
        adding.add_argument("--family-file", required=True)
        adding.add_argument("--name", help="Stored name; defaults to the document's name.")
        self.add_output_arguments(adding)

        showing = actions.add_parser("show", help="Prints a family as a JSON document.")
        self.add_family_arguments(showing)
        self.add_output_arguments(showing)

    def run(self, **options):
        action = getattr(self, f"run_{options['action']}")
        action(**options)

    def run_list(self, **options):
        entries = CatalogEntrySerializer(CATALOG.values(), many=True).data
        stored = FamilyDocument.objects.names()
        if options["format"] == OutputFormatChoices.TEXT:
            lines = []
            for entry in entries:
                domains = ", ".join(item["domain"] for item in entry["parameters"]) or "none"
                lines.append(f"{entry['name']}: parameters {domains}")
            lines.extend(f"{name}: stored" for name in stored)
            text = "\n".join(lines) + "\n"
        else:
            text = dump_json({"builtin": entries, "stored": stored})
        write_output(self, text, options.get("out"))

    def run_add(self, **options):
        document = CommandValidator.read_json_file(options["family_file"])
        name = options.get("name") or (document.get("name") if isinstance(document, dict) else None)
        stored = FamilyDocument(name=name, document=document)
        stored.save()
        logger.info("Stored family '%s'", stored.name)
        write_output(self, dump_json(FamilyDocumentSerializer(stored).data), options.get("out"))

    def run_show(self, **options):
        family = RunConfig.from_options(options).load_family()
        write_output(self, dump_json(family_to_document(family)), options.get("out"))
