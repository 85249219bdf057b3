"""Carbon Weave 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.732,
    "detail": 5,
    "roughness": 0.01,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
