"""
Générateur de rapports PDF
"""
import logging
import os
import re
from typing import Any, List
from xml.sax.saxutils import escape

from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.platypus import PageBreak, Paragraph, Preformatted, SimpleDocTemplate, Spacer

from config import Config
from tools.serialize import ReportDocument, render_text

logger = logging.getLogger(__name__)


class PDFGenerator:
    """Générateur de rapports PDF pour les documents de rapport"""

    def __init__(self):
        """Initialise le générateur de PDF"""
        self.styles = getSampleStyleSheet()
        self._setup_custom_styles()

    def _setup_custom_styles(self):
        """Configure les styles personnalisés pour le PDF"""
        self.styles.add(ParagraphStyle(
            name='CustomTitle',
            parent=self.styles['Heading1'],
            fontSize=22,
            textColor='#1a237e',
            spaceAfter=30,
            alignment=TA_CENTER,
            fontName='Helvetica-Bold'
        ))

        self.styles.add(ParagraphStyle(
            name='SectionTitle',
            parent=self.styles['Heading2'],
            fontSize=16,
            textColor='#283593',
            spaceAfter=12,
            spaceBefore=12,
            fontName='Helvetica-Bold'
        ))

        self.styles.add(ParagraphStyle(
            name='Tree',
            parent=self.styles['Code'],
            fontSize=8,
            leading=10
        ))

    def generate_report(self, doc: ReportDocument, output_path: str) -> str:
        """
        Génère le PDF d'un document de rapport

        Args:
            doc: Document à rendre
            output_path: Chemin du fichier PDF à générer

        Returns:
            Chemin du fichier PDF généré, chaîne vide en cas d'échec
        """
        try:
            pdf = SimpleDocTemplate(
                output_path,
                pagesize=A4,
                rightMargin=2*cm,
                leftMargin=2*cm,
                topMargin=2*cm,
                bottomMargin=2*cm,
                invariant=1
            )

            story = []
            story.extend(self._create_cover_page(doc))
            story.append(PageBreak())
            story.extend(self._create_body(doc))

            pdf.build(story)
            logger.info("✅ PDF généré : %s", output_path)
            return output_path

        except Exception as e:
            logger.error("❌ Erreur lors de la génération du PDF : %s", e)
            return ""

    def _create_cover_page(self, doc: ReportDocument) -> List:
        """Page de garde : commande, arguments et provenance"""
        elements: List[Any] = [Spacer(1, 3*cm)]
        elements.append(Paragraph("Rapport de monogénéité", self.styles['CustomTitle']))
        elements.append(Spacer(1, 1*cm))
        elements.append(Paragraph(f"<b>Commande :</b> {escape(doc.command)}", self.styles['Heading2']))
        for key in sorted(doc.arguments):
            elements.append(Paragraph(
                f"<b>{escape(str(key))} :</b> {escape(str(doc.arguments[key]))}",
                self.styles['Normal']
            ))
        elements.append(Spacer(1, 1*cm))
        prov = doc.provenance
        elements.append(Paragraph(
            f"<b>Outil :</b> {escape(prov.tool)} {escape(prov.version)}, graine {prov.seed}",
            self.styles['Normal']
        ))
        return elements

    def _create_body(self, doc: ReportDocument) -> List:
        """Arbre complet du résultat, identique au rendu texte"""
        return [
            Paragraph("Résultat", self.styles['SectionTitle']),
            Spacer(1, 0.5*cm),
            Preformatted(render_text(doc), self.styles['Tree']),
        ]


def report_filename(doc: ReportDocument) -> str:
    """Nom déterministe tiré de la commande et des arguments"""
    parts = [doc.command] + [f"{k}{doc.arguments[k]}" for k in sorted(doc.arguments)
                             if not isinstance(doc.arguments[k], (dict, list))]
    stem = re.sub(r'[^A-Za-z0-9_-]+', '_', "_".join(str(p) for p in parts)).strip('_')
    return f"rapport_{stem}.pdf"


def generate_pdf_report(doc: ReportDocument, output_dir: str = Config.REPORTS_DIR) -> str:
    """
    Fonction helper pour générer un rapport PDF

    Args:
        doc: Document de rapport
        output_dir: Répertoire de sortie

    Returns:
        Chemin du fichier PDF généré
    """
    os.makedirs(output_dir, exist_ok=True)
    output_path = os.path.join(output_dir, report_filename(doc))
    return PDFGenerator().generate_report(doc, output_path)
