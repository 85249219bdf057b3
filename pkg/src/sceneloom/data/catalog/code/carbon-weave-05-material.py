"""Carbon Weave 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.477,
    "detail": 3,
    "roughness": 0.397,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
