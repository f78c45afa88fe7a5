#pragma once

#include <string>
#include <vector>

#include "chartforge/errors.hpp"
#include "chartforge/seed.hpp"

namespace chartforge {

// Built-in seed synthesis tables: 12 domains x 20 themes, plus per-domain
// series/category pools and scatter x-axis descriptors. Themes carry their
// own unit and plausible numeric range so sampled data stays believable.

struct ThemeRow {
    const char* title;
    const char* y_topic;
    const char* y_unit;
    double lo, hi;
};

struct ScatterXRow {
    const char* topic;
    const char* unit;
    double lo, hi, step;
};

struct DomainTable {
    std::string domain;
    std::vector<ThemeRow> themes;
    std::vector<std::vector<std::string>> series_pools;
    std::vector<std::vector<std::string>> category_pools;
    std::vector<ScatterXRow> scatter_x;
};

inline const std::vector<DomainTable>& builtin_domains() {
    static const std::vector<DomainTable> tables = [] {
        std::vector<DomainTable> out;

        out.push_back(DomainTable{
            "economics",
            {{"Quarterly GDP Growth", "GDP growth", "%", 0.2, 8.0},
             {"Annual Inflation Rate", "inflation rate", "%", 0.5, 12.0},
             {"National Unemployment Rate", "unemployment rate", "%", 2.0, 15.0},
             {"Average Household Income", "household income", "thousand USD", 30, 120},
             {"Foreign Direct Investment", "investment", "billion USD", 2, 90},
             {"Export Volume by Market", "exports", "billion USD", 5, 300},
             {"Import Volume by Market", "imports", "billion USD", 5, 280},
             {"Consumer Price Index", "index", "points", 90, 160},
             {"Public Debt Levels", "debt", "trillion USD", 0.5, 30},
             {"Minimum Wage Comparison", "minimum wage", "USD per hour", 1, 16},
             {"Retail Sales Growth", "sales growth", "%", 0.5, 9},
             {"Corporate Tax Rates", "tax rate", "%", 8, 35},
             {"Housing Price Index", "price index", "points", 80, 220},
             {"Stock Market Returns", "annual return", "%", 1, 18},
             {"Central Bank Interest Rates", "interest rate", "%", 0.2, 9},
             {"Trade Balance by Region", "trade balance", "billion USD", 1, 120},
             {"Manufacturing Output", "output", "billion USD", 10, 400},
             {"Small Business Formation", "new businesses", "thousand", 5, 90},
             {"Venture Capital Funding", "funding", "billion USD", 1, 60},
             {"Labor Force Participation", "participation", "%", 55, 80}},
            {{"USA", "China", "Germany", "Japan", "India", "Brazil", "France"},
             {"North America", "Europe", "Asia Pacific", "Latin America", "Africa", "Middle East"}},
            {{"USA", "China", "Germany", "Japan", "India", "Brazil", "France", "UK"},
             {"Tech", "Finance", "Energy", "Retail", "Health", "Transport"}},
            {{"GDP per capita", "thousand USD", 10, 80, 5},
             {"Inflation", "%", 1, 12, 1},
             {"Interest rate", "%", 1, 10, 1}}});

        out.push_back(DomainTable{
            "healthcare",
            {{"Monthly Medication Costs", "cost", "USD", 10, 120},
             {"Hospital Admission Rates", "admissions", "per thousand", 5, 60},
             {"Average Patient Wait Times", "wait time", "minutes", 5, 180},
             {"Vaccination Coverage", "coverage", "%", 40, 99},
             {"Life Expectancy Trends", "life expectancy", "years", 60, 85},
             {"Infant Mortality Rates", "mortality", "per thousand", 1, 40},
             {"Healthcare Spending per Capita", "spending", "USD", 200, 9000},
             {"Nurse Staffing Levels", "nurses", "per hundred beds", 20, 120},
             {"Emergency Room Visits", "visits", "thousand", 2, 80},
             {"Chronic Disease Prevalence", "prevalence", "%", 3, 35},
             {"Surgery Success Rates", "success rate", "%", 75, 99},
             {"Health Insurance Premiums", "premium", "USD per month", 80, 700},
             {"Mental Health Consultations", "consultations", "thousand", 1, 50},
             {"Dental Checkup Frequency", "checkups", "per year", 0.5, 4},
             {"Blood Donation Volumes", "donations", "thousand units", 1, 40},
             {"Missed Clinic Appointments", "no-shows", "%", 2, 30},
             {"Telemedicine Adoption", "adoption", "%", 5, 70},
             {"Prescription Refill Counts", "refills", "thousand", 5, 120},
             {"Medical Research Grants", "grants", "million USD", 2, 90},
             {"Hospital Bed Occupancy", "occupancy", "%", 40, 98}},
            {{"Medication", "Surgery", "Therapy", "Diagnostics", "Nursing", "Prevention"},
             {"St. Mary", "Riverside", "Lakeview", "Central", "Mercy", "Hillcrest"}},
            {{"Cardiology", "Oncology", "Pediatrics", "Neurology", "Radiology", "Surgery"},
             {"0-14", "15-29", "30-44", "45-59", "60-74", "75+"}},
            {{"Age", "years", 20, 80, 5},
             {"BMI", "kg/m2", 18, 40, 2},
             {"Daily steps", "thousand", 2, 14, 1}}});

        out.push_back(DomainTable{
            "technology",
            {{"Smartphone Market Share", "market share", "%", 2, 45},
             {"Cloud Storage Adoption", "adoption", "%", 10, 85},
             {"Internet Penetration Rates", "penetration", "%", 20, 98},
             {"Software Release Frequency", "releases", "per year", 2, 40},
             {"Data Center Energy Use", "energy use", "GWh", 10, 400},
             {"App Download Counts", "downloads", "million", 1, 90},
             {"Broadband Speeds by Region", "speed", "Mbps", 10, 300},
             {"Cybersecurity Incidents", "incidents", "thousand", 1, 60},
             {"AI Patent Filings", "patents", "thousand", 0.5, 25},
             {"Semiconductor Production", "wafers", "million", 1, 30},
             {"E-waste Generation", "e-waste", "kilotons", 5, 90},
             {"Developer Salaries", "salary", "thousand USD", 40, 180},
             {"Open Source Contributions", "commits", "thousand", 5, 200},
             {"Website Load Times", "load time", "seconds", 0.5, 8},
             {"Social Media Engagement", "engagement", "million interactions", 1, 80},
             {"Streaming Subscriptions", "subscribers", "million", 2, 250},
             {"Device Battery Life", "battery life", "hours", 4, 30},
             {"Server Uptime Rates", "uptime", "%", 95, 100},
             {"Tech Startup Valuations", "valuation", "billion USD", 0.5, 40},
             {"Wearable Device Sales", "sales", "million units", 1, 60}},
            {{"Alpha Corp", "ByteWorks", "CloudNine", "DataPrime", "EdgeSoft", "FlexSys"},
             {"Mobile", "Desktop", "Tablet", "Web", "Console", "Embedded"}},
            {{"Q-Core", "NovaOS", "ZenPad", "AirBook", "PixelMax", "SmartHub"},
             {"NA", "EU", "APAC", "LATAM", "MEA", "Global"}},
            {{"RAM", "GB", 4, 64, 4},
             {"Screen size", "inches", 5, 17, 1},
             {"CPU cores", "cores", 2, 16, 2}}});

        out.push_back(DomainTable{
            "education",
            {{"Student Enrollment Figures", "enrollment", "thousand", 1, 80},
             {"Graduation Rates", "graduation rate", "%", 50, 99},
             {"Average Class Sizes", "class size", "students", 12, 40},
             {"Teacher Salaries", "salary", "thousand USD", 25, 90},
             {"Adult Literacy Rates", "literacy", "%", 60, 99},
             {"Test Score Averages", "score", "points", 40, 98},
             {"Tuition Fee Trends", "tuition", "thousand USD", 2, 55},
             {"Library Book Circulation", "loans", "thousand", 2, 90},
             {"Scholarship Awards", "awards", "hundred", 1, 60},
             {"Online Course Completions", "completions", "thousand", 1, 70},
             {"School Lunch Participation", "participation", "%", 30, 95},
             {"Student-Teacher Ratios", "ratio", "students per teacher", 8, 35},
             {"Education Budget Allocation", "budget", "million USD", 10, 400},
             {"Dropout Rates", "dropout rate", "%", 1, 25},
             {"Campus Housing Occupancy", "occupancy", "%", 50, 99},
             {"Research Publication Counts", "publications", "hundred", 1, 50},
             {"Language Course Popularity", "enrollments", "thousand", 0.5, 30},
             {"After-school Attendance", "attendance", "%", 10, 80},
             {"Laptop Access in Schools", "access", "%", 20, 100},
             {"Exam Pass Rates", "pass rate", "%", 40, 99}},
            {{"Primary", "Secondary", "High School", "College", "Graduate", "Vocational"},
             {"Math", "Science", "History", "Literature", "Arts", "Languages"}},
            {{"Grade 1", "Grade 3", "Grade 5", "Grade 7", "Grade 9", "Grade 11"},
             {"North High", "South High", "East High", "West High", "Central High", "Valley High"}},
            {{"Study hours", "hours", 1, 12, 1},
             {"Class size", "students", 10, 40, 5}}});

        out.push_back(DomainTable{
            "energy",
            {{"Solar Panel Installations", "installations", "thousand", 1, 90},
             {"Wind Farm Capacity", "capacity", "GW", 0.5, 40},
             {"Electricity Consumption", "consumption", "TWh", 5, 400},
             {"Natural Gas Prices", "price", "USD per MMBtu", 1.5, 12},
             {"Coal Production Volumes", "production", "million tons", 5, 300},
             {"Grid Reliability Scores", "reliability", "points", 60, 100},
             {"Home Heating Costs", "cost", "USD per month", 40, 400},
             {"Renewable Energy Share", "share", "%", 5, 80},
             {"Battery Storage Capacity", "capacity", "GWh", 0.5, 30},
             {"Oil Refinery Output", "output", "thousand barrels", 50, 900},
             {"Hydropower Generation", "generation", "TWh", 2, 120},
             {"Energy Import Dependence", "dependence", "%", 5, 90},
             {"Carbon Emission Levels", "emissions", "megatons", 10, 500},
             {"Fleet Fuel Efficiency", "efficiency", "km per liter", 8, 25},
             {"Power Outage Durations", "duration", "minutes", 10, 400},
             {"Geothermal Plant Output", "output", "GWh", 5, 200},
             {"Biofuel Production", "production", "million liters", 10, 400},
             {"Nuclear Plant Capacity", "capacity", "GW", 1, 60},
             {"Peak Demand Loads", "load", "GW", 5, 90},
             {"Charging Station Growth", "stations", "thousand", 0.5, 50}},
            {{"Solar", "Wind", "Hydro", "Nuclear", "Coal", "Natural Gas", "Biomass"},
             {"VoltGrid", "SunPeak", "WindCrest", "HydroMax", "CoreEnergy", "GridPoint"}},
            {{"Solar", "Wind", "Hydro", "Nuclear", "Coal", "Gas", "Biomass"},
             {"Texas", "Ohio", "Utah", "Iowa", "Nevada", "Oregon"}},
            {{"Panel area", "m2", 10, 100, 10},
             {"Wind speed", "m/s", 3, 15, 1}}});

        out.push_back(DomainTable{
            "agriculture",
            {{"Wheat Yield per Hectare", "yield", "tons per hectare", 1, 9},
             {"Corn Production Volumes", "production", "million tons", 2, 120},
             {"Organic Farm Certification", "certified farms", "hundred", 1, 60},
             {"Fertilizer Usage Rates", "usage", "kg per hectare", 20, 250},
             {"Irrigation Water Use", "water use", "million liters", 10, 400},
             {"Livestock Herd Sizes", "herd size", "thousand head", 5, 300},
             {"Dairy Output Trends", "output", "million liters", 5, 200},
             {"Crop Insurance Claims", "claims", "hundred", 1, 80},
             {"Farm Equipment Sales", "sales", "million USD", 5, 200},
             {"Soil Quality Index", "index", "points", 30, 95},
             {"Pesticide Application Rates", "application", "kg per hectare", 0.5, 12},
             {"Greenhouse Vegetable Output", "output", "thousand tons", 1, 60},
             {"Honey Production", "production", "tons", 5, 300},
             {"Fishery Catch Volumes", "catch", "thousand tons", 2, 150},
             {"Agricultural Export Values", "exports", "billion USD", 0.5, 40},
             {"Seasonal Labor Demand", "workers", "thousand", 2, 90},
             {"Grain Storage Capacity", "capacity", "million tons", 1, 50},
             {"Orchard Fruit Yields", "yield", "tons per hectare", 2, 30},
             {"Rice Paddy Acreage", "acreage", "thousand hectares", 5, 300},
             {"Poultry Production", "production", "million birds", 1, 80}},
            {{"Wheat", "Corn", "Soybeans", "Rice", "Barley", "Oats"},
             {"Green Valley", "Sunrise", "Oak Ridge", "Meadowbrook", "Clearwater", "Hillside"}},
            {{"Wheat", "Corn", "Soybeans", "Rice", "Barley", "Oats"},
             {"North Farm", "South Farm", "East Farm", "West Farm", "Valley", "Uplands"}},
            {{"Rainfall", "mm", 200, 900, 100},
             {"Fertilizer", "kg/ha", 20, 120, 10}}});

        out.push_back(DomainTable{
            "transport",
            {{"Public Transit Ridership", "ridership", "million trips", 1, 90},
             {"Average Commute Times", "commute time", "minutes", 10, 90},
             {"Airline Passenger Volumes", "passengers", "million", 1, 120},
             {"Freight Rail Tonnage", "tonnage", "million tons", 5, 300},
             {"Electric Vehicle Registrations", "registrations", "thousand", 1, 200},
             {"Traffic Congestion Index", "congestion", "points", 10, 90},
             {"Bicycle Lane Coverage", "coverage", "km", 10, 400},
             {"Port Container Throughput", "containers", "million TEU", 0.5, 40},
             {"Road Maintenance Spending", "spending", "million USD", 10, 400},
             {"Fuel Price Levels", "price", "USD per liter", 0.8, 3},
             {"Parking Occupancy Rates", "occupancy", "%", 30, 99},
             {"Ride-share Trip Counts", "trips", "million", 0.5, 60},
             {"Bridge Condition Scores", "score", "points", 40, 98},
             {"Highway Toll Revenue", "revenue", "million USD", 5, 200},
             {"Bus Fleet Electrification", "electrified", "%", 2, 80},
             {"Train Punctuality Rates", "punctuality", "%", 60, 99},
             {"Pedestrian Crossing Counts", "crossings", "thousand", 1, 80},
             {"Car Ownership Rates", "ownership", "per thousand", 100, 800},
             {"Ferry Service Usage", "passengers", "thousand", 5, 300},
             {"Airport Security Wait Times", "wait time", "minutes", 5, 60}},
            {{"Bus", "Train", "Tram", "Ferry", "Subway", "Bicycle"},
             {"TransCo", "MetroLink", "CityRide", "SwiftRail", "BlueLine", "GoExpress"}},
            {{"Berlin", "Madrid", "Warsaw", "Vienna", "Dublin", "Lisbon"},
             {"Bus", "Train", "Tram", "Ferry", "Subway", "Bicycle"}},
            {{"Distance", "km", 5, 50, 5},
             {"Speed", "km/h", 30, 120, 10}}});

        out.push_back(DomainTable{
            "retail",
            {{"Monthly Store Revenue", "revenue", "thousand USD", 20, 900},
             {"Online Sales Share", "share", "%", 5, 70},
             {"Customer Footfall Counts", "visitors", "thousand", 2, 120},
             {"Inventory Turnover Rates", "turnover", "times per year", 2, 15},
             {"Seasonal Discount Depth", "discount", "%", 5, 60},
             {"Loyalty Program Membership", "members", "thousand", 1, 200},
             {"Return Rates by Category", "returns", "%", 1, 25},
             {"Average Basket Size", "basket", "USD", 10, 150},
             {"Shelf Stock Accuracy", "accuracy", "%", 70, 100},
             {"Checkout Queue Times", "queue time", "minutes", 1, 15},
             {"Gift Card Sales", "sales", "thousand USD", 5, 300},
             {"Same-store Sales Growth", "growth", "%", 0.5, 12},
             {"Supplier Lead Times", "lead time", "days", 2, 45},
             {"Warehouse Utilization", "utilization", "%", 40, 99},
             {"Product Review Scores", "score", "points", 2, 5},
             {"Flash Sale Conversion", "conversion", "%", 1, 20},
             {"Store Opening Counts", "openings", "stores", 1, 60},
             {"Mall Vacancy Rates", "vacancy", "%", 2, 30},
             {"Private Label Share", "share", "%", 5, 45},
             {"Holiday Shopping Spend", "spend", "million USD", 5, 300}},
            {{"Electronics", "Clothing", "Groceries", "Furniture", "Toys", "Cosmetics"},
             {"MartOne", "ShopEase", "ValueHub", "PrimeStore", "DailyMart", "UrbanGoods"}},
            {{"Outlet", "Mall", "Online", "Downtown", "Suburban", "Airport"},
             {"Electronics", "Clothing", "Groceries", "Furniture", "Toys", "Cosmetics"}},
            {{"Store area", "hundred m2", 2, 20, 2},
             {"Ad spend", "thousand USD", 5, 50, 5}}});

        out.push_back(DomainTable{
            "sports",
            {{"Season Ticket Sales", "tickets", "thousand", 1, 80},
             {"Average Match Attendance", "attendance", "thousand", 2, 90},
             {"Player Transfer Fees", "fees", "million USD", 1, 120},
             {"Team Win Percentages", "win rate", "%", 20, 85},
             {"Stadium Concession Revenue", "revenue", "thousand USD", 10, 500},
             {"Youth League Participation", "participants", "thousand", 1, 60},
             {"Broadcast Viewership", "viewers", "million", 0.5, 40},
             {"Marathon Finisher Counts", "finishers", "thousand", 1, 50},
             {"Gym Membership Growth", "members", "thousand", 2, 90},
             {"Equipment Sales Trends", "sales", "million USD", 2, 150},
             {"Athlete Sponsorship Deals", "deals", "million USD", 0.5, 60},
             {"Training Hours per Week", "hours", "hours", 4, 30},
             {"Injury Rates by Sport", "injuries", "per thousand", 5, 80},
             {"Championship Medal Counts", "medals", "medals", 1, 50},
             {"Esports Prize Pools", "prize pool", "million USD", 0.5, 30},
             {"Swimming Event Entries", "entries", "hundred", 1, 40},
             {"Golf Course Bookings", "bookings", "thousand", 1, 30},
             {"Ski Resort Visits", "visits", "thousand", 5, 300},
             {"Basketball Scoring Averages", "points", "points", 70, 130},
             {"Soccer Goal Tallies", "goals", "goals", 20, 110}},
            {{"Falcons", "Tigers", "Sharks", "Wolves", "Eagles", "Panthers"},
             {"Soccer", "Basketball", "Tennis", "Swimming", "Cycling", "Running"}},
            {{"Falcons", "Tigers", "Sharks", "Wolves", "Eagles", "Panthers"},
             {"Soccer", "Basketball", "Tennis", "Swimming", "Cycling", "Running"}},
            {{"Training hours", "hours", 2, 20, 2},
             {"Player age", "years", 18, 38, 2}}});

        out.push_back(DomainTable{
            "climate",
            {{"Average Monthly Rainfall", "rainfall", "mm", 5, 400},
             {"Surface Temperature Readings", "temperature", "degrees C", 2, 38},
             {"Sea Level Measurements", "sea level rise", "mm", 1, 12},
             {"Air Quality Index", "AQI", "points", 10, 200},
             {"Forest Cover Share", "cover", "%", 10, 70},
             {"Glacier Thickness Readings", "thickness", "m", 20, 300},
             {"Drought Severity Index", "severity", "points", 5, 90},
             {"Storm Frequency Counts", "storms", "per year", 1, 40},
             {"Snowpack Depth", "depth", "cm", 10, 400},
             {"River Flow Rates", "flow", "m3/s", 10, 900},
             {"Coral Reef Coverage", "coverage", "%", 5, 60},
             {"Wildfire Burned Area", "area", "thousand hectares", 1, 300},
             {"Relative Humidity Levels", "humidity", "%", 20, 95},
             {"UV Index Readings", "UV index", "points", 1, 11},
             {"CO2 Concentration", "concentration", "ppm", 350, 430},
             {"Wind Speed Averages", "wind speed", "km/h", 5, 60},
             {"Ozone Column Thickness", "thickness", "Dobson units", 220, 400},
             {"Coastal Erosion Rates", "erosion", "m per year", 0.2, 6},
             {"Heatwave Day Counts", "days", "days", 1, 45},
             {"Sea Ice Extent", "extent", "million km2", 3, 16}},
            {{"Coastal Station", "Mountain Station", "Urban Station", "Desert Station", "Forest Station", "Island Station"},
             {"Oslo", "Cairo", "Sydney", "Toronto", "Mumbai", "Lima"}},
            {{"Oslo", "Cairo", "Sydney", "Toronto", "Mumbai", "Lima"},
             {"Coast", "Mountains", "Plains", "Desert", "Forest", "Islands"}},
            {{"Altitude", "hundred m", 1, 25, 2},
             {"Latitude", "degrees", 10, 60, 5}}});

        out.push_back(DomainTable{
            "finance",
            {{"Bank Deposit Growth", "deposits", "billion USD", 1, 90},
             {"Credit Card Balances", "balance", "billion USD", 5, 300},
             {"Mortgage Approval Rates", "approval rate", "%", 40, 95},
             {"Mutual Fund Inflows", "inflows", "billion USD", 0.5, 60},
             {"Insurance Claim Volumes", "claims", "thousand", 5, 300},
             {"ATM Transaction Counts", "transactions", "million", 1, 90},
             {"Pension Fund Returns", "return", "%", 1, 15},
             {"Loan Default Rates", "default rate", "%", 0.5, 12},
             {"Savings Account Yields", "yield", "%", 0.2, 6},
             {"Branch Network Sizes", "branches", "hundred", 1, 60},
             {"Mobile Banking Adoption", "adoption", "%", 10, 90},
             {"Remittance Flows", "remittances", "billion USD", 1, 120},
             {"Bond Yield Trends", "yield", "%", 0.5, 9},
             {"IPO Listing Counts", "listings", "listings", 5, 300},
             {"Dividend Payout Ratios", "payout", "%", 10, 80},
             {"Household Debt Levels", "debt", "% of income", 40, 180},
             {"Crowdfunding Totals", "raised", "million USD", 1, 200},
             {"Microloan Disbursements", "loans", "thousand", 2, 90},
             {"Audit Completion Times", "duration", "days", 5, 60},
             {"Fraud Detection Rates", "detection", "%", 50, 99}},
            {{"First National", "Union Trust", "Harbor Bank", "Summit Financial", "Crestline", "Meridian"},
             {"Checking", "Savings", "Mortgage", "Credit Card", "Investment", "Insurance"}},
            {{"Branch", "Online", "Mobile", "ATM", "Phone", "Agent"},
             {"Checking", "Savings", "Mortgage", "Credit Card", "Investment", "Insurance"}},
            {{"Credit score", "points", 550, 800, 25},
             {"Income", "thousand USD", 25, 150, 25}}});

        out.push_back(DomainTable{
            "tourism",
            {{"Hotel Occupancy Rates", "occupancy", "%", 30, 98},
             {"International Visitor Arrivals", "arrivals", "million", 0.5, 60},
             {"Museum Attendance", "visitors", "thousand", 5, 400},
             {"Cruise Passenger Numbers", "passengers", "thousand", 10, 500},
             {"Theme Park Visits", "visits", "million", 0.5, 20},
             {"Restaurant Reservations", "reservations", "thousand", 2, 120},
             {"Camping Permit Sales", "permits", "thousand", 1, 60},
             {"Guided Tour Bookings", "bookings", "thousand", 1, 80},
             {"Souvenir Shop Revenue", "revenue", "thousand USD", 5, 200},
             {"Flight Booking Lead Times", "lead time", "days", 5, 120},
             {"National Park Visits", "visits", "million", 0.2, 15},
             {"City Walking Tour Counts", "tours", "hundred", 1, 50},
             {"Beach Resort Bookings", "bookings", "thousand", 2, 150},
             {"Festival Attendance", "attendance", "thousand", 5, 400},
             {"Travel Insurance Uptake", "uptake", "%", 10, 80},
             {"Hostel Overnight Stays", "stays", "thousand", 2, 120},
             {"Heritage Site Visits", "visits", "thousand", 5, 300},
             {"Winery Tour Popularity", "tours", "hundred", 1, 40},
             {"Average Trip Distances", "distance", "hundred km", 1, 60},
             {"Convention Center Events", "events", "events", 10, 300}},
            {{"Paris", "Rome", "Tokyo", "Cancun", "Bali", "Prague"},
             {"Family", "Business", "Luxury", "Budget", "Adventure", "Cultural"}},
            {{"Paris", "Rome", "Tokyo", "Cancun", "Bali", "Prague"},
             {"Family", "Business", "Luxury", "Budget", "Adventure", "Cultural"}},
            {{"Stay length", "nights", 1, 14, 1},
             {"Group size", "people", 1, 10, 1}}});

        return out;
    }();
    return tables;
}

inline const DomainTable& find_domain(const std::string& tag) {
    for (const auto& d : builtin_domains())
        if (d.domain == tag) return d;
    fail(Errc::not_found, "unknown domain_tag: " + tag);
}

inline std::vector<std::string> builtin_domain_tags() {
    std::vector<std::string> tags;
    for (const auto& d : builtin_domains()) tags.push_back(d.domain);
    return tags;
}

} // namespace chartforge
