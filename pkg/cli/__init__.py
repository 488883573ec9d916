from cli.cf_parser import CfExpression
from cli.cf_parser import CfSyntaxError
from cli.cf_parser import Convention
from cli.cf_parser import format_cf
from cli.cf_parser import parse_cf
from cli.builtin_examples import BUILTINS
from cli.report_document import ReportDocument
from cli.report_document import validate_document
