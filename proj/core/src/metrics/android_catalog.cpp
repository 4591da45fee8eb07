#include "migrank/metrics/android_catalog.hpp"

#include <fstream>
#include <sstream>

#include "migrank/errors.hpp"

namespace migrank::metrics {

namespace {

// Framework classes plus the widely-extended support/androidx variants.
// AppWidgetProvider is a receiver: home-screen widget providers extend it
// and it extends BroadcastReceiver in the framework.
constexpr const char* kBundledCatalog = R"(activity	Activity
activity	AppCompatActivity
activity	FragmentActivity
activity	ComponentActivity
activity	ListActivity
activity	PreferenceActivity
activity	TabActivity
activity	ExpandableListActivity
activity	AccountAuthenticatorActivity
activity	NativeActivity
activity	AliasActivity
activity	ActivityGroup
view	View
view	ViewGroup
view	TextView
view	ImageView
view	Button
view	ImageButton
view	CompoundButton
view	CheckBox
view	RadioButton
view	ToggleButton
view	Switch
view	EditText
view	AutoCompleteTextView
view	MultiAutoCompleteTextView
view	LinearLayout
view	RelativeLayout
view	FrameLayout
view	TableLayout
view	GridLayout
view	ConstraintLayout
view	CoordinatorLayout
view	DrawerLayout
view	RecyclerView
view	ListView
view	GridView
view	ExpandableListView
view	AbsListView
view	AdapterView
view	ScrollView
view	HorizontalScrollView
view	NestedScrollView
view	SurfaceView
view	TextureView
view	VideoView
view	WebView
view	ProgressBar
view	SeekBar
view	RatingBar
view	Spinner
view	ViewPager
view	CardView
view	Toolbar
view	Chronometer
view	ViewStub
view	Space
view	KeyboardView
view	AppWidgetHostView
receiver	BroadcastReceiver
receiver	WakefulBroadcastReceiver
receiver	AppWidgetProvider
receiver	DeviceAdminReceiver
service	Service
service	IntentService
service	JobIntentService
service	JobService
service	AccessibilityService
service	NotificationListenerService
service	TileService
service	InputMethodService
service	SpellCheckerService
service	VpnService
service	WallpaperService
service	DreamService
service	HostApduService
service	MediaBrowserService
service	MediaBrowserServiceCompat
provider	ContentProvider
provider	DocumentsProvider
provider	FileProvider
provider	SearchRecentSuggestionsProvider
fragment	Fragment
fragment	DialogFragment
fragment	AppCompatDialogFragment
fragment	BottomSheetDialogFragment
fragment	ListFragment
fragment	PreferenceFragment
fragment	PreferenceFragmentCompat
fragment	WebViewFragment
)";

}  // namespace

const AndroidCatalog& AndroidCatalog::bundled() {
  static const AndroidCatalog catalog = parse(kBundledCatalog);
  return catalog;
}

AndroidCatalog AndroidCatalog::parse(const std::string& text) {
  AndroidCatalog catalog;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw MalformedLog(line_no, "expected feature<TAB>SimpleName");
    catalog.feature_by_name_[line.substr(tab + 1)] = line.substr(0, tab);
  }
  return catalog;
}

AndroidCatalog AndroidCatalog::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace migrank::metrics
