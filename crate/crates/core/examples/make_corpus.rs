//! Regenerates the bundled fixtures under `fixtures/`.
//!
//! Each corpus screen carries the usual defects of real trees: raw boxes,
//! a foreground layer listed alongside the background, the same control
//! under two roles, hidden or off-screen nodes, and long paragraphs.
//!
//!     cargo run --example make_corpus

use std::fs;
use std::path::Path;

use axcompact::model::{write_tree, BoundingBox, Px, ScreenState, SemanticContent, UiElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const W: Px = 1920;
const H: Px = 1080;

const LOREM: &str = "Travellers planning a long trip should compare fares across several dates, since prices change \
    frequently and weekday departures are often cheaper than weekend ones. Baggage allowances differ between \
    carriers and fare classes, so check what is included before you pay. Seat selection, priority boarding and \
    meals may be sold separately. Refund and change policies vary as well: flexible tickets cost more up front \
    but can save money when plans are uncertain. Remember to verify passport validity and visa requirements for \
    every country on your itinerary, including transit stops, and allow enough time for connections at large \
    airports where terminals can be far apart.";

fn toolkit_class(tag: &str) -> &'static str {
    match tag {
        "push-button" | "button" => "GtkButton",
        "toggle-button" => "GtkToggleButton",
        "link" => "HTMLAnchorElement",
        "entry" | "input" => "GtkEntry",
        "combo-box" => "GtkComboBox",
        "check-box" => "GtkCheckButton",
        "radio-button" => "GtkRadioButton",
        "menu" | "menu-item" => "GtkMenuItem",
        "page-tab" => "GtkNotebookTab",
        "table-cell" => "ScTableCell",
        "heading" => "HTMLHeadingElement",
        "paragraph" => "HTMLParagraphElement",
        "dialog" | "alert" => "GtkDialog",
        "icon" | "image" => "GtkImage",
        _ => "GtkLabel",
    }
}

type Builder = fn() -> (ScreenState, &'static str);

struct Screen {
    els: Vec<UiElement>,
    rng: ChaCha8Rng,
}

impl Screen {
    fn new(seed: u64) -> Self {
        Self {
            els: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn full(&mut self, tag: &str, name: &str, text: &str, desc: &str, b: (Px, Px, Px, Px)) {
        let mut c = SemanticContent::new(tag, name).with_text(text);
        c.cls = format!("{} accessible-node", toolkit_class(tag));
        c.description = desc.to_string();
        self.els
            .push(UiElement::new(0, c, BoundingBox::new(b.0, b.1, b.2, b.3)));
    }

    fn add(&mut self, tag: &str, name: &str, b: (Px, Px, Px, Px)) {
        self.full(tag, name, "", "", b);
    }

    /// A control together with the label node many toolkits expose for it.
    fn twin(&mut self, tag: &str, name: &str, b: (Px, Px, Px, Px)) {
        self.full(tag, name, "", &format!("Activates {name}"), b);
        let (dx, dy) = (self.rng.gen_range(0..4), self.rng.gen_range(0..3));
        let twin_tag = if tag == "link" { "static" } else { "label" };
        self.full(
            twin_tag,
            name,
            name,
            "",
            (b.0 + dx, b.1 + dy, b.2 - 2 * dx, b.3),
        );
    }

    fn row(&mut self, tag: &str, names: &[&str], (x0, y, w, h): (Px, Px, Px, Px), gap: Px) {
        for (i, n) in names.iter().enumerate() {
            self.twin(tag, n, (x0 + i as Px * (w + gap), y, w, h));
        }
    }

    fn column(&mut self, tag: &str, names: &[&str], (x, y0, w, h): (Px, Px, Px, Px), gap: Px) {
        for (i, n) in names.iter().enumerate() {
            self.twin(tag, n, (x, y0 + i as Px * (h + gap), w, h));
        }
    }

    fn paragraph(&mut self, lead: &str, b: (Px, Px, Px, Px)) {
        let body = format!("{lead} {LOREM}");
        self.full("paragraph", "", &body, "", b);
    }

    /// Nodes a user cannot see: collapsed menus, scrolled-away rows,
    /// zero-size placeholders and toolkit bookkeeping.
    fn hidden(&mut self, names: &[&str]) {
        for (i, n) in names.iter().enumerate() {
            let i = i as Px;
            self.full("menu-item", n, "", "", (-400, 200 + 24 * i, 220, 22));
            self.full("link", n, "", "", (300 + 40 * i, H + 200 + 30 * i, 180, 24));
        }
        for i in 0..6 {
            self.add("filler", "", (0, 0, 0, 0));
            self.add("static", "", (500 + 10 * i, 500, 0, 0));
        }
        self.add("redundant-object", "", (0, 0, W, H));
        self.add("desktop-frame", "Desktop", (0, 0, W, H));
    }

    fn headings(&mut self, names: &[&str], x: Px, y0: Px) {
        for (i, h) in names.iter().enumerate() {
            self.full("heading", h, h, "", (x, y0 + 50 * i as Px, 600, 36));
        }
    }

    /// A centered dialog: message lines, an optional choice, a button row.
    fn dialog(
        &mut self,
        tag: &str,
        title: &str,
        lines: &[&str],
        choice: Option<(&str, &str)>,
        buttons: &[&str],
    ) {
        self.add(tag, title, (660, 380, 600, 220));
        for (i, l) in lines.iter().enumerate() {
            self.full("label", "", l, "", (680, 400 + 34 * i as Px, 560, 30));
        }
        if let Some((t, n)) = choice {
            self.twin(t, n, (680, 470, 360, 24));
        }
        let n = buttons.len() as Px;
        let x0 = 960 - (140 * n - 10) / 2;
        for (i, b) in buttons.iter().enumerate() {
            self.twin("push-button", b, (x0 + 140 * i as Px, 510, 130, 36));
        }
    }

    fn state(self) -> ScreenState {
        ScreenState::new(self.els, W, H, 0)
    }
}

fn chrome() -> (ScreenState, &'static str) {
    let mut s = Screen::new(1);
    s.add("page-tab", "Flights - Google Flights", (10, 0, 240, 40));
    s.twin("push-button", "Close", (220, 10, 20, 20));
    s.add("page-tab", "Tokyo travel guide", (260, 0, 240, 40));
    s.twin("push-button", "Close", (470, 10, 20, 20));
    s.twin("push-button", "New Tab", (510, 5, 30, 30));
    s.row(
        "push-button",
        &["Back", "Forward", "Reload"],
        (10, 50, 34, 34),
        6,
    );
    s.full(
        "entry",
        "Address and search bar",
        "google.com/travel/flights",
        "",
        (140, 50, 1400, 34),
    );
    s.row(
        "push-button",
        &[
            "Bookmark this tab",
            "Extensions",
            "Customize and control Google Chrome",
        ],
        (1560, 50, 110, 34),
        6,
    );
    s.row(
        "link",
        &["Gmail", "Drive", "Calendar", "Maps", "News", "Bank"],
        (10, 112, 110, 26),
        8,
    );
    s.full("heading", "Flights", "Flights", "", (400, 180, 300, 48));
    s.twin("combo-box", "Round trip", (400, 250, 160, 40));
    s.twin("combo-box", "1 passenger", (580, 250, 160, 40));
    s.twin("combo-box", "Economy", (760, 250, 160, 40));
    s.full("entry", "Where from?", "Paris", "", (400, 310, 380, 48));
    s.full("entry", "Where to?", "", "", (800, 310, 380, 48));
    s.full("entry", "Departure", "", "", (1200, 310, 200, 48));
    s.full("entry", "Return", "", "", (1420, 310, 200, 48));
    s.twin("push-button", "Explore", (860, 380, 160, 44));
    s.full(
        "heading",
        "Popular destinations",
        "Popular destinations",
        "",
        (400, 460, 500, 36),
    );
    for (i, city) in ["Tokyo", "Rome", "New York", "Lisbon", "Seoul", "Cairo"]
        .iter()
        .enumerate()
    {
        let x = 400 + 200 * i as Px;
        s.twin("link", city, (x, 510, 180, 120));
        s.full(
            "image",
            &format!("Photo of {city}"),
            "",
            "",
            (x, 510, 180, 100),
        );
    }
    s.paragraph(
        "Find cheap flights to Tokyo and everywhere else.",
        (400, 660, 1100, 120),
    );
    s.paragraph(
        "Useful tools to help you find the best deals.",
        (400, 800, 1100, 90),
    );
    s.hidden(&[
        "Settings",
        "History",
        "Downloads",
        "Passwords",
        "Print",
        "Cast",
    ]);
    s.full(
        "label",
        "",
        "Before you continue, we use cookies and data to deliver and maintain Google services",
        "",
        (200, 900, 800, 30),
    );
    s.full(
        "label",
        "",
        "If you agree, we will also use cookies to personalise content and measure ads",
        "",
        (200, 935, 800, 30),
    );
    s.full(
        "label",
        "",
        "Select More options to see details about managing your privacy settings",
        "",
        (200, 970, 800, 30),
    );
    s.twin("push-button", "Reject all", (480, 1010, 150, 40));
    s.twin("push-button", "Accept all", (650, 1010, 150, 40));
    s.twin("link", "More options", (820, 1010, 150, 40));
    (s.state(), "Search for a one way flight from Paris to Tokyo")
}

fn vscode() -> (ScreenState, &'static str) {
    let mut s = Screen::new(2);
    s.column(
        "push-button",
        &["Files", "Terminal", "Chrome", "Text Editor"],
        (10, 120, 70, 70),
        10,
    );
    s.row(
        "menu",
        &[
            "File",
            "Edit",
            "Selection",
            "View",
            "Go",
            "Run",
            "Terminal",
            "Help",
        ],
        (130, 40, 80, 28),
        4,
    );
    s.column(
        "toggle-button",
        &[
            "Explorer",
            "Search",
            "Source Control",
            "Run and Debug",
            "Extensions",
        ],
        (110, 140, 44, 44),
        12,
    );
    s.full("heading", "EXPLORER", "EXPLORER", "", (170, 140, 380, 24));
    s.column(
        "tree-item",
        &[
            "src",
            "main.py",
            "utils.py",
            "data.py",
            "tests",
            "test_main.py",
            "README.md",
            "requirements.txt",
        ],
        (180, 180, 360, 24),
        2,
    );
    s.add("heading", "OUTLINE", (170, 900, 380, 24));
    s.add("heading", "TIMELINE", (170, 930, 380, 24));
    s.row("page-tab", &["main.py", "utils.py"], (590, 140, 160, 34), 2);
    s.row(
        "push-button",
        &["src", "main.py", "train"],
        (600, 180, 70, 20),
        6,
    );
    let code = [
        "import torch",
        "from utils import load_config",
        "",
        "def train(model, loader, epochs=10):",
        "    optimizer = torch.optim.Adam(model.parameters(), lr=1e-3)",
        "    for epoch in range(epochs):",
        "        for batch in loader:",
        "            loss = model(batch).mean()",
        "            loss.backward()",
        "            optimizer.step()",
        "    return model",
    ];
    for (i, line) in code.iter().enumerate() {
        s.full("text", "", line, "", (640, 220 + 22 * i as Px, 1200, 20));
        s.full(
            "label",
            &(i + 1).to_string(),
            "",
            "",
            (590, 220 + 22 * i as Px, 40, 20),
        );
    }
    s.paragraph(
        "Docstring: trains the model on the given loader.",
        (640, 500, 1200, 160),
    );
    s.row(
        "push-button",
        &[
            "main",
            "0 errors",
            "Ln 4, Col 5",
            "Spaces: 4",
            "UTF-8",
            "Python",
        ],
        (120, 1045, 150, 24),
        10,
    );
    s.hidden(&[
        "Copy Path",
        "Reveal in File Manager",
        "Open Timeline",
        "Go to Symbol",
    ]);
    s.dialog(
        "dialog",
        "Visual Studio Code",
        &[
            "Do you want to save the changes you made to main.py?",
            "Your changes will be lost if you don't save them.",
        ],
        Some(("check-box", "Do not ask again")),
        &["Don't Save", "Save", "Cancel"],
    );
    (s.state(), "Rename the function train to fit in main.py")
}

fn thunderbird() -> (ScreenState, &'static str) {
    let mut s = Screen::new(3);
    s.column(
        "toggle-button",
        &["Mail", "Address Book", "Calendar", "Tasks", "Chat"],
        (20, 120, 70, 60),
        10,
    );
    s.row(
        "push-button",
        &[
            "Get Messages",
            "Write",
            "Chat",
            "Address Book",
            "Tag",
            "Quick Filter",
        ],
        (130, 40, 130, 36),
        8,
    );
    s.full("entry", "Search", "", "", (1200, 40, 500, 36));
    s.column(
        "tree-item",
        &[
            "Inbox",
            "Drafts",
            "Sent",
            "Archives",
            "Junk",
            "Trash",
            "Local Folders",
            "Outbox",
        ],
        (130, 220, 250, 28),
        4,
    );
    let subjects = [
        ("Quarterly report draft", "Alice Martin", "09:12"),
        ("Team lunch on Friday", "Bob Chen", "08:47"),
        ("Invoice #2231", "Billing", "Yesterday"),
        ("Re: conference travel", "Carla Ruiz", "Yesterday"),
        ("Weekly newsletter", "News", "Mon"),
        ("Password reset", "IT Support", "Mon"),
        ("Project kickoff notes", "Dan Okafor", "Sun"),
        ("Your order has shipped", "Shop", "Sat"),
    ];
    for (i, (subj, from, date)) in subjects.iter().enumerate() {
        let y = 220 + 34 * i as Px;
        s.full("table-cell", subj, subj, "", (420, y, 340, 30));
        s.full("table-cell", from, from, "", (780, y, 180, 30));
        s.full("table-cell", date, date, "", (970, y, 80, 30));
    }
    s.full(
        "heading",
        "Quarterly report draft",
        "",
        "",
        (1200, 220, 600, 30),
    );
    s.full("label", "From: Alice Martin", "", "", (1200, 260, 600, 24));
    s.row(
        "push-button",
        &["Reply", "Forward", "Archive", "Junk", "Delete"],
        (1200, 292, 100, 30),
        6,
    );
    s.paragraph(
        "Hi all, attached is the first draft of the quarterly report.",
        (1200, 340, 680, 300),
    );
    s.hidden(&["Mark as Read", "Move to", "Copy to", "Open in New Tab"]);
    s.full("label", "", "Thunderbird collects data to improve your experience. Read the privacy notice to change what you share.", "", (400, 135, 1370, 40));
    s.twin("link", "Privacy notice", (1040, 140, 120, 30));
    s.twin("push-button", "Choose what I share", (1580, 140, 180, 30));
    s.twin("push-button", "Close", (1780, 140, 30, 30));
    (s.state(), "Forward the quarterly report draft to Bob")
}

fn gimp() -> (ScreenState, &'static str) {
    let mut s = Screen::new(4);
    s.row(
        "menu",
        &[
            "File", "Edit", "Select", "View", "Image", "Layers", "Colors", "Tools", "Filters",
            "Windows", "Help",
        ],
        (10, 40, 80, 28),
        4,
    );
    let tools = [
        "Move Tool",
        "Rectangle Select Tool",
        "Free Select Tool",
        "Fuzzy Select Tool",
        "Crop Tool",
        "Rotate Tool",
        "Scale Tool",
        "Flip Tool",
        "Text Tool",
        "Bucket Fill Tool",
        "Paintbrush Tool",
        "Eraser Tool",
        "Clone Tool",
        "Smudge Tool",
        "Dodge Tool",
        "Color Picker Tool",
    ];
    for (i, t) in tools.iter().enumerate() {
        let (c, r) = ((i % 4) as Px, (i / 4) as Px);
        s.twin("toggle-button", t, (20 + 44 * c, 120 + 44 * r, 40, 40));
    }
    s.full("label", "Foreground color", "", "", (30, 320, 60, 60));
    s.full("label", "Background color", "", "", (90, 340, 60, 60));
    s.column(
        "label",
        &[
            "Opacity",
            "Mode",
            "Size",
            "Aspect Ratio",
            "Angle",
            "Spacing",
        ],
        (20, 420, 380, 30),
        6,
    );
    s.full(
        "image",
        "photo.xcf-1.0 (RGB color 8-bit gamma integer, GIMP built-in sRGB, 1 layer) 1600x1200",
        "",
        "",
        (440, 110, 1040, 860),
    );
    s.row(
        "page-tab",
        &["Layers", "Channels", "Paths"],
        (1520, 110, 120, 30),
        4,
    );
    s.column(
        "table-cell",
        &["Background", "Text layer", "Shadow"],
        (1520, 160, 380, 40),
        4,
    );
    s.row(
        "page-tab",
        &["Brushes", "Patterns", "Fonts"],
        (1520, 560, 120, 30),
        4,
    );
    s.paragraph(
        "Brush help: the selected brush is applied with the current dynamics.",
        (1520, 620, 380, 260),
    );
    s.row(
        "label",
        &["px", "100%", "Background (7.2 MB)"],
        (440, 1040, 200, 24),
        10,
    );
    s.hidden(&["Undo History", "Pointer", "Histogram", "Navigation"]);
    s.dialog(
        "dialog",
        "Quit GIMP",
        &[
            "There is one image with unsaved changes: photo.xcf.",
            "Save it now, or close GIMP and discard the changes?",
        ],
        Some(("check-box", "Do not ask again")),
        &["Discard Changes", "Save", "Cancel"],
    );
    (
        s.state(),
        "Flip the photo horizontally and export it as png",
    )
}

fn cell_name(c: usize, r: usize) -> String {
    format!("{}{}", (b'A' + c as u8) as char, r + 1)
}

fn calc() -> (ScreenState, &'static str) {
    let mut s = Screen::new(5);
    s.row(
        "menu",
        &[
            "File", "Edit", "View", "Insert", "Format", "Styles", "Sheet", "Data", "Tools",
            "Window", "Help",
        ],
        (10, 30, 80, 26),
        4,
    );
    s.row(
        "push-button",
        &[
            "New", "Open", "Save", "Export", "Print", "Cut", "Copy", "Paste", "Undo", "Redo",
            "Sort", "AutoSum",
        ],
        (10, 64, 40, 28),
        4,
    );
    s.full("combo-box", "Name Box", "A1", "", (10, 140, 120, 28));
    s.twin("push-button", "Function Wizard", (140, 140, 30, 28));
    s.full("entry", "Input line", "Region", "", (180, 140, 1700, 28));
    let values: [&[&str]; 7] = [
        &["Region", "Q1", "Q2", "Q3", "Total"],
        &["North", "120", "135", "150", "405"],
        &["South", "98", "110", "104", "312"],
        &["East", "143", "151", "160", "454"],
        &["West", "87", "90", "99", "276"],
        &[],
        &["Sum", "448", "486", "513", "1447"],
    ];
    for r in 0..36 {
        for c in 0..16 {
            let v = values
                .get(r)
                .and_then(|row| row.get(c))
                .copied()
                .unwrap_or("");
            s.full(
                "table-cell",
                &cell_name(c, r),
                v,
                "",
                (60 + 110 * c as Px, 260 + 20 * r as Px, 110, 20),
            );
        }
    }
    s.row("page-tab", &["Sheet1", "Sheet2"], (60, 1010, 100, 24), 4);
    s.row(
        "label",
        &["Sheet 1 of 2", "Default", "English (USA)", "Sum=0", "100%"],
        (10, 1050, 180, 24),
        10,
    );
    s.paragraph(
        "Comment on B2: figures are preliminary and subject to audit.",
        (1500, 300, 380, 200),
    );
    s.hidden(&[
        "Insert Rows Above",
        "Delete Columns",
        "Hide Sheet",
        "Freeze Cells",
    ]);
    s.dialog(
        "dialog",
        "Save Document?",
        &[
            "Save changes to document \"sales.ods\" before closing?",
            "Your changes will be lost if you don't save them.",
        ],
        Some(("check-box", "Do not show again")),
        &["Don't Save", "Save", "Cancel"],
    );
    (
        s.state(),
        "Compute the Total for the East region in column E",
    )
}

fn impress() -> (ScreenState, &'static str) {
    let mut s = Screen::new(6);
    s.row(
        "menu",
        &[
            "File",
            "Edit",
            "View",
            "Insert",
            "Format",
            "Slide",
            "Slide Show",
            "Tools",
            "Window",
            "Help",
        ],
        (10, 30, 90, 26),
        4,
    );
    s.row(
        "push-button",
        &[
            "Save",
            "Undo",
            "Redo",
            "Table",
            "Image",
            "Chart",
            "Text Box",
            "Start from First Slide",
        ],
        (10, 64, 120, 28),
        4,
    );
    for i in 0..6 {
        s.twin(
            "list-item",
            &format!("Slide {}", i + 1),
            (20, 200 + 120 * i, 300, 110),
        );
    }
    s.full(
        "heading",
        "Click to add Title",
        "Quarterly Review",
        "",
        (560, 260, 900, 120),
    );
    s.paragraph(
        "Click to add Text. Highlights of the quarter.",
        (560, 420, 900, 400),
    );
    s.full("heading", "Properties", "", "", (1560, 120, 340, 30));
    s.column(
        "combo-box",
        &["Slide layout", "Master Slides", "Format", "Orientation"],
        (1560, 170, 340, 32),
        8,
    );
    s.column(
        "check-box",
        &["Master Background", "Master Objects"],
        (1560, 360, 340, 26),
        6,
    );
    s.row(
        "label",
        &["Slide 1 of 6", "Default", "English (USA)", "62%"],
        (10, 1050, 200, 24),
        10,
    );
    s.hidden(&["New Slide", "Duplicate Slide", "Delete Slide", "Hide Slide"]);
    s.dialog(
        "dialog",
        "Tip of the Day",
        &[
            "Tip of the Day: layout settings for each slide live in the properties deck.",
            "Tips can be turned off in the settings at any time.",
        ],
        Some(("check-box", "Show tips on startup")),
        &["Next Tip", "OK", "Open Settings"],
    );
    (s.state(), "Change the layout of slide 2 to Title Only")
}

fn writer() -> (ScreenState, &'static str) {
    let mut s = Screen::new(7);
    s.row(
        "menu",
        &[
            "File", "Edit", "View", "Insert", "Format", "Styles", "Table", "Form", "Tools",
            "Window", "Help",
        ],
        (10, 30, 80, 26),
        4,
    );
    s.row(
        "push-button",
        &[
            "Save",
            "Print",
            "Undo",
            "Redo",
            "Bold",
            "Italic",
            "Underline",
            "Align Left",
            "Center",
        ],
        (10, 64, 100, 28),
        4,
    );
    s.full(
        "combo-box",
        "Paragraph Style",
        "Default Paragraph Style",
        "",
        (10, 100, 200, 28),
    );
    s.full(
        "combo-box",
        "Font Name",
        "Liberation Serif",
        "",
        (220, 100, 200, 28),
    );
    s.full(
        "heading",
        "Meeting minutes",
        "Meeting minutes",
        "",
        (400, 300, 1000, 40),
    );
    s.paragraph(
        "Attendees discussed the travel budget for the spring conference.",
        (400, 360, 1000, 180),
    );
    s.paragraph(
        "Action items: book venues, confirm speakers and publish the agenda.",
        (400, 560, 1000, 180),
    );
    s.headings(&["1. Budget", "2. Venues", "3. Speakers"], 400, 760);
    s.column(
        "push-button",
        &["Properties", "Styles", "Gallery", "Navigator"],
        (1880, 140, 32, 32),
        6,
    );
    s.row(
        "label",
        &[
            "Page 1 of 3",
            "412 words, 2,644 characters",
            "English (USA)",
            "100%",
        ],
        (10, 1050, 220, 24),
        10,
    );
    s.hidden(&[
        "Track Changes",
        "Compare Document",
        "Mail Merge",
        "Word Count",
    ]);
    s.dialog(
        "alert",
        "Document in Use",
        &[
            "Changes cannot be saved to 'minutes.odt' while another user edits it.",
            "Open a read-only copy, or close it and save under a new name?",
        ],
        Some(("check-box", "Remember my choice")),
        &["Open Read-Only", "Save As", "Cancel"],
    );
    (s.state(), "Make the heading Meeting minutes bold")
}

fn vlc() -> (ScreenState, &'static str) {
    let mut s = Screen::new(8);
    s.row(
        "menu",
        &[
            "Media", "Playback", "Audio", "Video", "Subtitle", "Tools", "View", "Help",
        ],
        (10, 30, 90, 26),
        4,
    );
    s.full("label", "VLC media player", "", "", (700, 130, 500, 40));
    s.full("heading", "Playlist", "Playlist", "", (10, 230, 300, 30));
    let items = [
        "intro.mp4",
        "lecture_01.mkv",
        "lecture_02.mkv",
        "interview.mp3",
        "credits.mp4",
    ];
    for (i, it) in items.iter().enumerate() {
        let y = 280 + 32 * i as Px;
        s.full("table-cell", it, it, "", (10, y, 600, 30));
        s.full("table-cell", "", "12:34", "", (620, y, 100, 30));
    }
    s.paragraph(
        "Media information: lecture recording with chapter markers.",
        (800, 280, 1000, 300),
    );
    s.row(
        "push-button",
        &[
            "Play",
            "Previous",
            "Stop",
            "Next",
            "Fullscreen",
            "Toggle playlist",
            "Loop",
            "Shuffle",
            "Mute",
        ],
        (10, 1010, 60, 40),
        8,
    );
    s.full("slider", "Volume", "80%", "", (1700, 1020, 200, 24));
    s.hidden(&["Open File", "Open Network Stream", "Convert / Save", "Quit"]);
    s.dialog(
        "dialog",
        "Privacy and Network Access Policy",
        &[
            "In order to protect your privacy, VLC does not collect personal data.",
            "Metadata may be fetched from the network if you allow it.",
        ],
        Some(("check-box", "Allow metadata network access")),
        &["Learn More", "Close", "Continue"],
    );
    (s.state(), "Play lecture_02.mkv in fullscreen")
}

fn os() -> (ScreenState, &'static str) {
    let mut s = Screen::new(9);
    s.twin("push-button", "Activities", (10, 0, 100, 30));
    s.add("label", "Oct 16 09:41", (900, 0, 120, 30));
    s.twin("push-button", "System Menu", (1800, 0, 110, 30));
    s.column(
        "push-button",
        &[
            "Files",
            "Terminal",
            "Chrome",
            "Ubuntu Software",
            "Help",
            "Trash",
        ],
        (10, 80, 80, 80),
        10,
    );
    s.twin("push-button", "Show Applications", (10, 990, 80, 80));
    s.add("frame", "Home", (400, 150, 900, 600));
    s.twin("push-button", "Minimize", (1180, 160, 30, 30));
    s.twin("push-button", "Close", (1250, 160, 30, 30));
    s.column(
        "list-item",
        &[
            "Recent",
            "Starred",
            "Home",
            "Documents",
            "Downloads",
            "Music",
            "Pictures",
        ],
        (410, 200, 180, 26),
        4,
    );
    for (i, f) in [
        "Desktop",
        "Documents",
        "Downloads",
        "Music",
        "Pictures",
        "Videos",
        "notes.txt",
        "budget.ods",
    ]
    .iter()
    .enumerate()
    {
        let (c, r) = ((i % 4) as Px, (i / 4) as Px);
        s.full("icon", f, "", "", (620 + 160 * c, 220 + 130 * r, 120, 110));
    }
    s.paragraph(
        "Home folder readme: files you add here are backed up nightly.",
        (620, 500, 660, 200),
    );
    s.full("icon", "Home", "", "", (1780, 120, 90, 90));
    s.full("icon", "Trash", "", "", (1780, 240, 90, 90));
    s.column(
        "menu-item",
        &[
            "New Folder",
            "Paste",
            "Show Desktop in Files",
            "Open in Terminal",
            "Change Background",
        ],
        (1500, 700, 240, 30),
        0,
    );
    s.hidden(&["Power Off", "Log Out", "Lock", "Suspend"]);
    s.dialog(
        "dialog",
        "Help improve Ubuntu",
        &[
            "Ubuntu can collect anonymous information that helps developers improve it.",
            "See our privacy policy for what is sent and when.",
        ],
        Some(("radio-button", "No, don't send system info")),
        &["Privacy Policy", "OK", "Back"],
    );
    (
        s.state(),
        "Create a new folder named reports on the desktop",
    )
}

fn generic() -> (ScreenState, &'static str) {
    let mut s = Screen::new(10);
    s.add("label", "Notes", (20, 20, 200, 40));
    s.full("entry", "Filter notes", "", "", (20, 80, 360, 36));
    let notes = [
        "Groceries",
        "Reading list",
        "Gift ideas",
        "Packing list",
        "Recipes",
        "Passwords hint",
        "Garden plan",
    ];
    s.column("list-item", &notes, (20, 140, 360, 48), 6);
    s.twin("push-button", "New note", (20, 560, 160, 40));
    s.full(
        "heading",
        "Packing list",
        "Packing list",
        "",
        (440, 80, 1000, 48),
    );
    s.paragraph(
        "Packing list for the trip: passport, adapters, chargers, rain jacket.",
        (440, 150, 1200, 300),
    );
    s.paragraph(
        "Second page of notes: ideas collected over the last few weeks.",
        (440, 480, 1200, 260),
    );
    s.row(
        "toggle-button",
        &["Bold", "Italic", "Checklist", "Image", "Share"],
        (440, 780, 100, 36),
        8,
    );
    s.hidden(&["Export", "Print", "Archive", "Duplicate"]);
    s.add("alert", "Allow notifications?", (1450, 20, 440, 160));
    s.add(
        "label",
        "Notes would like to send you reminders.",
        (1470, 60, 400, 30),
    );
    s.twin("push-button", "Allow", (1600, 120, 120, 36));
    s.twin("push-button", "Block", (1740, 120, 120, 36));
    s.twin("push-button", "×", (1860, 25, 24, 24));
    (s.state(), "Add umbrella to the packing list")
}

/// A document window, then the same window with a dialog on top.
fn dialog_pair() -> (ScreenState, ScreenState) {
    let mut s = Screen::new(11);
    s.row(
        "menu",
        &["File", "Edit", "View", "Insert", "Format", "Tools", "Help"],
        (10, 30, 80, 26),
        4,
    );
    s.row(
        "push-button",
        &["Save", "Print", "Undo", "Redo", "Bold", "Italic"],
        (10, 64, 100, 28),
        4,
    );
    for i in 0..16 {
        s.full(
            "paragraph",
            "",
            &format!("Line {} of the quarterly summary draft.", i + 1),
            "",
            (400, 200 + 40 * i, 1000, 30),
        );
    }
    s.row(
        "label",
        &["Page 1 of 1", "English (USA)", "100%"],
        (10, 1050, 220, 24),
        10,
    );
    let prev = ScreenState::new(s.els.clone(), W, H, 0);
    s.add("dialog", "Save Document?", (660, 380, 600, 260));
    s.add(
        "label",
        "Save changes to document before closing?",
        (700, 420, 520, 30),
    );
    s.add("check-box", "Do not show again", (700, 470, 240, 26));
    s.add("push-button", "Save", (720, 580, 110, 36));
    s.add("push-button", "Don't Save", (850, 580, 130, 36));
    s.add("push-button", "Cancel", (1000, 580, 110, 36));
    (prev, ScreenState::new(s.els, W, H, 1))
}

fn main() -> std::io::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let corpus = root.join("corpus");
    fs::create_dir_all(&corpus)?;
    let screens: [(&str, Builder); 10] = [
        ("01_chrome", chrome),
        ("02_vscode", vscode),
        ("03_thunderbird", thunderbird),
        ("04_gimp", gimp),
        ("05_calc", calc),
        ("06_impress", impress),
        ("07_writer", writer),
        ("08_vlc", vlc),
        ("09_os", os),
        ("10_generic", generic),
    ];
    for (name, build) in screens {
        let (state, instruction) = build();
        fs::write(corpus.join(format!("{name}.tsv")), write_tree(&state))?;
        fs::write(
            corpus.join(format!("{name}.txt")),
            format!("{instruction}\n"),
        )?;
    }
    let (prev, curr) = dialog_pair();
    fs::write(root.join("dialog_prev.tsv"), write_tree(&prev))?;
    fs::write(root.join("dialog_curr.tsv"), write_tree(&curr))?;
    println!(
        "wrote {} corpus fixtures and the dialog pair to {}",
        screens.len(),
        root.display()
    );
    Ok(())
}
